#include <cmath>

#include <gtest/gtest.h>

#include "advkit/compose.hpp"

namespace advkit {
namespace {

const CheckRow& row(const CheckReport& rep, const std::string& suffix) {
  for (const auto& r : rep.rows) {
    if (r.instance_id.size() >= suffix.size() &&
        r.instance_id.compare(r.instance_id.size() - suffix.size(), suffix.size(), suffix) == 0) {
      return r;
    }
  }
  throw std::runtime_error("no row " + suffix);
}

TEST(OrAnd, IdentitiesGiveRootTwo) {
  OrAndValues v;
  CheckReport rep = verify_or_and_bound(functions::identity_bit(), functions::identity_bit(), {}, "id", &v);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_NEAR(v.adv_or, std::sqrt(2.0), 1e-3);
  EXPECT_NEAR(v.adv_or * v.adv_or, v.adv1 * v.adv1 + v.adv2 * v.adv2, 1e-3);
}

TEST(OrAnd, ConstantComponentKeepsInequality) {
  OrAndValues v;
  CheckReport rep = verify_or_and_bound(functions::constant(1, 0), functions::or_n(2), {}, "c", &v);
  EXPECT_TRUE(row(rep, ":or-bound").pass);
  EXPECT_NEAR(v.adv_or, v.adv2, 1e-3);
}

TEST(OrAnd, ConstantOneBreaksAndEquality) {
  // g_or is constant while g_and = f1, so Adv(g_and) = Adv(g_or) fails.
  OrAndValues v;
  CheckReport rep = verify_or_and_bound(functions::or_n(2), functions::constant(1, 1), {}, "c1", &v);
  EXPECT_TRUE(row(rep, ":or-bound").pass);
  EXPECT_FALSE(row(rep, ":and-equals-or").pass);
  EXPECT_NEAR(v.adv_and, std::sqrt(2.0), 1e-3);
}

TEST(OrAnd, ComposedVectorsForOr2PairAreFeasible) {
  FiniteFunction f = functions::or_n(2);
  VectorSolution s = adv_opt(f).solution;
  ComposedSolution c = compose_or_vectors(f, f, s, s);
  EXPECT_LE(c.value, 2.0 + 1e-3);
  EXPECT_NO_THROW(validate_single_family(c.solution, build_or(f, f), 1e-3));
}

TEST(OrAnd, ComposedVectorsWithZeroComponent) {
  FiniteFunction zero = functions::constant(1, 0);
  FiniteFunction f = functions::or_n(2);
  ComposedSolution c = compose_or_vectors(zero, f, adv_opt(zero).solution, adv_opt(f).solution);
  EXPECT_NEAR(c.value, std::sqrt(2.0), 1e-3);
}

TEST(OrAnd, SeededSweepPasses) {
  OrAndSweep sweep;
  sweep.vary_arity = true;
  sweep.trials = 20;
  sweep.seed = 9;
  EXPECT_TRUE(sweep_or_and(sweep, {}).all_pass());
}

TEST(OrAnd, DeMorganConsistency) {
  FiniteFunction f1 = functions::or_n(2);
  FiniteFunction f2 = functions::xor_n(1);
  double and_value = adv_value(build_and(f1, f2)).upper;
  double via_or = adv_value(negate(build_or(negate(f1), negate(f2)))).upper;
  EXPECT_NEAR(and_value, via_or, 1e-3);
}

TEST(SharedAnd, RandomPairs) {
  CounterRng rng(4);
  for (int t = 0; t < 10; ++t) {
    FiniteFunction f1 = functions::random_boolean(2, rng);
    FiniteFunction f2 = functions::random_boolean(2, rng);
    EXPECT_TRUE(verify_shared_and(f1, f2, {}, std::to_string(t)).all_pass());
  }
}

TEST(Switch, XorInstanceIsTight) {
  std::map<std::string, FiniteFunction> family{{"0", functions::coordinate(2, 1)},
                                               {"1", negate(functions::coordinate(2, 1))}};
  CheckReport rep = verify_switch_bound(functions::coordinate(2, 0), family, {});
  EXPECT_TRUE(rep.all_pass());
  const CheckRow& r = row(rep, ":switch-bound");
  EXPECT_NEAR(r.lhs, 2.0, 1e-3);
  EXPECT_NEAR(r.rhs, 2.0, 1e-3);
}

TEST(Switch, ConstantSelector) {
  CheckReport rep = verify_switch_bound(functions::constant(2, 0), {{"0", functions::or_n(2)}}, {});
  EXPECT_TRUE(rep.all_pass());
  EXPECT_NEAR(row(rep, ":switch-bound").lhs, std::sqrt(2.0), 1e-3);
}

TEST(Switch, BlocksOfFirstBit) {
  auto d = switch_block_decompose(functions::coordinate(2, 0),
                                  {{"0", functions::or_n(2)}, {"1", functions::and_n(2)}});
  ASSERT_EQ(d.parts.size(), 2U);
  EXPECT_EQ(d.parts[0].size(), 2U);
  EXPECT_EQ(d.parts[1].size(), 2U);
  EXPECT_TRUE(d.identities_hold());
}

TEST(Switch, BlocksOfXor) {
  auto d = switch_block_decompose(functions::xor_n(2), {{"0", functions::or_n(2)}, {"1", functions::or_n(2)}});
  ASSERT_EQ(d.parts.size(), 2U);
  EXPECT_EQ(d.parts[0], (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(d.parts[1], (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(d.identities_hold());
  auto c = switch_block_decompose(functions::constant(2, 1), {{"1", functions::or_n(2)}});
  ASSERT_EQ(c.parts.size(), 1U);
  EXPECT_EQ(c.parts[0].size(), 4U);
}

TEST(Switch, SeededSweepPasses) {
  SwitchSweep sweep;
  sweep.trials = 10;
  EXPECT_TRUE(sweep_switch(sweep, {}).all_pass());
}

TEST(Gamma2Facts, SeedSevenPasses) {
  FactSweep sweep;
  sweep.trials = 10;
  sweep.seed = 7;
  EXPECT_TRUE(gamma2_fact_checks(sweep, {}).all_pass());
}

}  // namespace
}  // namespace advkit
