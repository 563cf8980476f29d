#include <cmath>

#include <gtest/gtest.h>

#include "advkit/errors.hpp"
#include "advkit/recur.hpp"
#include "advkit/strings/cost_model.hpp"
#include "oracles.hpp"

namespace advkit {
namespace {

RecurrenceSpec spec(const std::string& a, const std::string& b, const std::string& c, long long p = 0,
                    bool squared = false) {
  RecurrenceSpec s;
  s.a = parse_real(a);
  s.b = parse_real(b);
  s.c = parse_exponent(c);
  s.p = p;
  s.squared = squared;
  return s;
}

TEST(Rational, ParsesExactly) {
  EXPECT_EQ(parse_rational("-2/3"), Rational(-2, 3));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("0.67"), Rational(67, 100));
  EXPECT_EQ(format_rational(Rational(4, 6)), "2/3");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Rational, ComparesPowersExactly) {
  // 13^(1/2) vs 7^(2/3): 13^3 = 2197 < 7^4 = 2401.
  auto cmp = compare_powers({13, Rational(1, 2)}, {7, Rational(2, 3)});
  ASSERT_TRUE(cmp.has_value());
  EXPECT_EQ(*cmp, -1);
  auto eq = compare_powers({4, Rational(1, 2)}, {2, Rational(1)});
  ASSERT_TRUE(eq.has_value());
  EXPECT_EQ(*eq, 0);
  EXPECT_FALSE(compare_powers({3, Rational(1, 10007)}, {2, Rational(1, 10009)}).has_value());
}

TEST(Master, ThreeCases) {
  BoundClass c1 = master_solve(spec("4", "2", "1"));
  EXPECT_EQ(c1.case_id, 1);
  EXPECT_EQ(c1.str(), "O(n^2)");
  BoundClass c2 = master_solve(spec("2", "2", "1"));
  EXPECT_EQ(c2.case_id, 2);
  EXPECT_EQ(c2.str(), "O(n log n)");
  BoundClass c3 = master_solve(spec("1", "2", "1/2"));
  EXPECT_EQ(c3.case_id, 3);
  EXPECT_EQ(c3.str(), "O(n^1/2)");
}

TEST(Master, SquaredRegularRecurrence) {
  BoundClass b = master_solve(spec("2", "2", "1", 0, true));
  EXPECT_EQ(b.str(), "O(n^1/2 log^1/2 n)");
}

TEST(Master, KcsRecurrenceIsCaseThree) {
  for (long long p = 0; p < 4; ++p) {
    BoundClass b = master_solve(spec("sqrt(13)", "7", "2/3", p));
    EXPECT_EQ(b.case_id, 3);
    EXPECT_TRUE(same_class(b, BoundClass::poly_log(Rational(2, 3), p)));
    EXPECT_FALSE(b.near_boundary);
  }
}

TEST(Master, PerturbingAcrossTheBoundaryFlipsTheCase) {
  // log_2 2 = 1.
  EXPECT_EQ(master_solve(spec("2", "2", "0.999999999")).case_id, 1);
  EXPECT_EQ(master_solve(spec("2", "2", "1")).case_id, 2);
  EXPECT_EQ(master_solve(spec("2", "2", "1.000000001")).case_id, 3);
}

TEST(Master, ValidatesInputs) {
  EXPECT_THROW(master_solve(spec("0", "2", "1")), InvalidArgument);
  EXPECT_THROW(master_solve(spec("2", "1", "1")), InvalidArgument);
  EXPECT_THROW(master_solve(spec("2", "2", "1", -1)), InvalidArgument);
}

TEST(Master, IrrationalExponentIsKept) {
  // log_6 sqrt(11) ≈ 0.66915 > 2/3: case 1, exponent not rational.
  BoundClass b = master_solve(spec("sqrt(11)", "6", "2/3"));
  EXPECT_EQ(b.case_id, 1);
  EXPECT_NEAR(b.exponent, std::log(std::sqrt(11.0)) / std::log(6.0), 1e-12);
  EXPECT_GT(b.exponent, 2.0 / 3.0);
}

TEST(Strategies, RegularRecurrence) {
  const ExactReal two = ExactReal::from_rational(2);
  BoundClass b = strategy1_bound({two, two}, BoundClass::poly_log(Rational(1, 2)));
  EXPECT_EQ(b.str(), "O(n^1/2 log^1/2 n)");
}

TEST(Strategies, PureBranching) {
  const ExactReal three = ExactReal::from_rational(3);
  BoundClass b = strategy1_bound({three, three, three, three}, BoundClass::poly_log(0));
  // sqrt of n^{log_3 4}.
  EXPECT_NEAR(b.exponent, std::log(4.0) / std::log(3.0) / 2, 1e-12);
}

TEST(Strategies, OneBranchConstantAux) {
  const ExactReal two = ExactReal::from_rational(2);
  BoundClass b = strategy1_bound({two}, BoundClass::poly_log(0));
  EXPECT_EQ(b.str(), "O(log^1/2 n)");
}

TEST(Strategies, LisStep) {
  const ExactReal two = ExactReal::from_rational(2);
  for (int k = 2; k <= 4; ++k) {
    BoundClass aux = BoundClass::poly_log(Rational(1, 2), Rational(3 * k - 4, 2));
    BoundClass b = strategy1_bound({two, two}, aux);
    EXPECT_TRUE(same_class(b, BoundClass::poly_log(Rational(1, 2), Rational(3 * (k - 1), 2)))) << b.str();
  }
}

TEST(Strategies, MismatchedBranchesAreUnsupported) {
  EXPECT_THROW(strategy1_bound({ExactReal::from_rational(2), ExactReal::from_rational(3)}, BoundClass::poly_log(0)),
               UnsupportedForm);
  EXPECT_THROW(strategy1_bound({}, BoundClass::poly_log(0)), UnsupportedForm);
}

TEST(Strategies, LinearForms) {
  BoundClass kcs = strategy2_bound(parse_real("sqrt(13)"), ExactReal::from_rational(7),
                                   BoundClass::poly_log(Rational(2, 3), 2));
  EXPECT_EQ(kcs.str(), "O(n^2/3 log^2 n)");
  BoundClass worse = strategy2_bound(parse_real("sqrt(11)"), ExactReal::from_rational(6),
                                     BoundClass::poly_log(Rational(2, 3), 2));
  EXPECT_EQ(worse.case_id, 1);
  EXPECT_GT(worse.exponent, 2.0 / 3.0);
  BoundClass root = strategy2_bound(ExactReal::from_rational(1), ExactReal::from_rational(2),
                                    BoundClass::poly_log(Rational(1, 2)));
  EXPECT_EQ(root.str(), "O(n^1/2)");
}

TEST(SplitFactor, TwoThirdsIsSeven) {
  EXPECT_EQ(min_splitting_factor(Exponent::from_rational(Rational(2, 3))), 7U);
  EXPECT_EQ(oracle::split_factor(2, 3), 7U);
}

TEST(SplitFactor, SmallerFactorsMissTwoThirds) {
  // log_m sqrt(2m-1) >= 2/3  <=>  (2m-1)^3 >= m^4.
  for (long long m = 2; m <= 6; ++m) {
    EXPECT_GE((2 * m - 1) * (2 * m - 1) * (2 * m - 1), m * m * m * m) << m;
    auto c = compare_log_ratio(critical_coefficient(static_cast<std::uint64_t>(m)), ExactReal::from_rational(m),
                               Exponent::from_rational(Rational(2, 3)));
    EXPECT_TRUE(c.exact);
    EXPECT_GE(c.sign, 0);
  }
}

TEST(SplitFactor, MatchesExactOracle) {
  // 0.67: log_6 sqrt(11) ≈ 0.66915 is already below, so the answer is 6.
  EXPECT_EQ(min_splitting_factor(parse_exponent("0.67")), 6U);
  EXPECT_EQ(oracle::split_factor(67, 100), 6U);
  EXPECT_EQ(min_splitting_factor(parse_exponent("0.99")), 2U);
  EXPECT_EQ(oracle::split_factor(99, 100), 2U);
  for (auto [p, q] : {std::pair{7, 10}, std::pair{3, 4}, std::pair{13, 20}, std::pair{33, 50}}) {
    EXPECT_EQ(min_splitting_factor(Exponent::from_rational(Rational(p, q))), oracle::split_factor(p, q)) << p << "/" << q;
  }
}

TEST(SplitFactor, DecimalTargetNearTwoThirds) {
  EXPECT_EQ(min_splitting_factor(parse_exponent("0.6666666667")), 7U);
}

TEST(SplitFactor, Errors) {
  EXPECT_THROW(min_splitting_factor(parse_exponent("1")), InvalidArgument);
  EXPECT_THROW(min_splitting_factor(parse_exponent("0")), InvalidArgument);
  EXPECT_THROW(min_splitting_factor(parse_exponent("0.5"), critical_coefficient, 1000), NotFound);
}

TEST(Headline, EveryRowMatches) {
  auto rows = headline_bounds();
  ASSERT_EQ(rows.size(), 12U);
  for (const auto& r : rows) EXPECT_TRUE(r.match) << r.problem << " " << r.derived.str() << " vs " << r.stated.str();
  EXPECT_EQ(rows[0].derived.str(), "O(n^1/2 log^1/2 n)");
}

TEST(Headline, BaseRows) {
  for (const auto& r : headline_bounds(1)) {
    if (r.problem == "k-CS") EXPECT_EQ(r.derived.str(), "O(n^2/3)");
    if (r.problem == "k-IS") EXPECT_EQ(r.derived.str(), "O(n^1/2)");
  }
}

TEST(CostModel, Entries) {
  using strings::Primitive;
  EXPECT_EQ(strings::cost_model(Primitive::search).str(), "O(n^1/2)");
  EXPECT_EQ(strings::cost_model(Primitive::bipartite_distinctness).str(), "O(n^2/3)");
  BoundClass match = strings::cost_model(Primitive::string_match);
  EXPECT_TRUE(match.tilde);
  EXPECT_EQ(match.str(), "O~(n^1/2)");
  EXPECT_THROW(strings::parse_primitive("sorting"), InvalidArgument);
  EXPECT_EQ(strings::parse_primitive("search"), Primitive::search);
}

}  // namespace
}  // namespace advkit
