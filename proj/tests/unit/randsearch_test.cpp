#include <gtest/gtest.h>

#include "advkit/errors.hpp"
#include "advkit/randsearch/search.hpp"
#include "advkit/strings/lis.hpp"
#include "oracles.hpp"

namespace advkit::randsearch {
namespace {

using strings::QueryString;
using strings::SymbolString;
using strings::kStar;

TEST(Budget, TenLogRatio) {
  EXPECT_EQ(iteration_budget(1000, 0.01), 167U);
  EXPECT_EQ(iteration_budget(1, 0.5), 10U);
}

TEST(Search, SingletonFoundInOneIteration) {
  SearchResult r = randomized_search({5}, 5, {}, 1);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(*r.found, 5);
  EXPECT_EQ(r.iterations, 1U);
  EXPECT_EQ(r.trace.back(), 0U);
}

TEST(Search, DuplicatesAlwaysResolve) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    SearchResult r = randomized_search({3, 3, 3, 7}, 7, {}, seed);
    ASSERT_TRUE(r.found);
    ASSERT_EQ(*r.found, 7);
    ASSERT_LE(r.iterations, 4U);
  }
}

TEST(Search, TraceShrinksAndOneCallPerOracle) {
  std::vector<Value> S(300);
  for (std::size_t i = 0; i < S.size(); ++i) S[i] = static_cast<Value>(i * 3 % 301);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SearchResult r = randomized_search(S, S[seed % S.size()], {}, seed);
    ASSERT_TRUE(r.found);
    ASSERT_EQ(r.compare_calls, r.iterations);
    ASSERT_EQ(r.sample_calls, r.iterations);
    ASSERT_EQ(r.trace.front(), S.size());
    ASSERT_EQ(r.trace.back(), 0U);
    for (std::size_t t = 1; t + 1 < r.trace.size(); ++t) ASSERT_LT(r.trace[t], r.trace[t - 1]);
  }
}

TEST(Search, AbstractOraclesCountCalls) {
  const Value target = 41;
  CompareOracle compare([&](Value r) { return target < r ? Answer::less : target == r ? Answer::equal : Answer::greater; });
  SampleOracle sample([](const Bracket& b, CounterRng& rng) -> std::optional<Value> {
    Value lo = b.lo ? *b.lo + 1 : 0;
    Value hi = b.hi ? *b.hi - 1 : 99;
    if (lo > hi) return std::nullopt;
    return rng.uniform_in(lo, hi);
  });
  CounterRng rng(9);
  SearchResult r = randomized_search(compare, sample, 100, {}, rng);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(*r.found, target);
  EXPECT_EQ(compare.calls(), r.iterations);
  EXPECT_EQ(sample.calls(), r.iterations);
}

TEST(Search, SampleOutsideBracketIsRejected) {
  CompareOracle compare([](Value) { return Answer::less; });
  SampleOracle sample([](const Bracket&, CounterRng&) -> std::optional<Value> { return 1000; });
  CounterRng rng(1);
  EXPECT_THROW(randomized_search(compare, sample, 10, {}, rng), InvariantViolation);
}

TEST(Search, MissingTargetIsRejected) { EXPECT_THROW(randomized_search({1, 2}, 3, {}, 0), InvalidArgument); }

TEST(Search, NoiseCanExhaustBudget) {
  std::vector<Value> S(64);
  for (std::size_t i = 0; i < S.size(); ++i) S[i] = static_cast<Value>(i);
  std::size_t aborted = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SearchOptions opts;
    opts.noise = 1.0;
    SearchResult r = randomized_search(S, 17, opts, seed);
    if (r.aborted) {
      ++aborted;
      EXPECT_FALSE(r.found);
      EXPECT_LE(r.iterations, iteration_budget(64, opts.delta));
    }
  }
  EXPECT_GT(aborted, 0U);
}

TEST(Shrink, ExpectedNextMatchesEnumeration) {
  for (std::size_t x = 1; x <= 12; ++x) {
    for (std::size_t p = 1; p <= x; ++p) ASSERT_NEAR(expected_next_size(x, p), oracle::expected_next(x, p), 1e-12);
  }
  EXPECT_NEAR(expected_next_size(2, 1), 0.5, 1e-12);
  for (std::size_t x = 2; x <= 200; ++x) {
    for (std::size_t p = 1; p <= x; ++p) ASSERT_LE(expected_next_size(x, p), 0.75 * static_cast<double>(x) + 1e-12);
  }
}

TEST(Shrink, EmpiricalStatisticPasses) {
  ShrinkReport r = shrink_statistic(100, 5000, 3);
  EXPECT_TRUE(r.pass());
  EXPECT_LE(r.ratio_mean, 0.75);
  EXPECT_FALSE(r.tail.empty());
}

TEST(Success, RateWithinDelta) {
  SuccessSweep sweep;
  sweep.trials = 2000;
  sweep.target_rank = 700;
  SuccessReport r = success_sweep(sweep);
  EXPECT_GE(r.success_rate(), 1.0 - sweep.delta);
  EXPECT_LE(r.max_iterations, r.budget);
  EXPECT_EQ(r.budget, 167U);
}

TEST(Success, Deterministic) {
  SuccessSweep sweep;
  sweep.trials = 50;
  SuccessReport a = success_sweep(sweep);
  SuccessReport b = success_sweep(sweep);
  ASSERT_EQ(a.runs.size(), b.runs.size());
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    EXPECT_EQ(a.runs[i].iterations, b.runs[i].iterations);
    EXPECT_EQ(a.runs[i].found, b.runs[i].found);
  }
}

TEST(ViaSearchTest, MinLastExample) {
  QueryString x(SymbolString{2, kStar, 1, 3});
  ViaSearch v = min_last_via_search(x, 2, 0.01, 1);
  ASSERT_TRUE(v.exists);
  ASSERT_TRUE(v.value);
  EXPECT_EQ(*v.value, 3);
}

TEST(ViaSearchTest, AbsentWhenNoIncreasingRun) {
  QueryString x(SymbolString{3, 2, 1});
  ViaSearch v = min_last_via_search(x, 2, 0.01, 1);
  EXPECT_FALSE(v.exists);
  EXPECT_FALSE(v.value);
  EXPECT_FALSE(max_first_via_search(x, 2, 0.01, 1).exists);
}

TEST(ViaSearchTest, MatchesExactValues) {
  CounterRng rng(77);
  for (int t = 0; t < 300; ++t) {
    SymbolString s(1 + rng.uniform(10));
    for (auto& c : s) c = rng.bernoulli(0.15) ? kStar : static_cast<strings::Symbol>(rng.uniform(8));
    oracle::Word w(s.begin(), s.end());
    for (std::size_t j = 1; j <= 3; ++j) {
      ViaSearch lo = min_last_via_search(QueryString(s), j, 0.001, static_cast<std::uint64_t>(t));
      ViaSearch hi = max_first_via_search(QueryString(s), j, 0.001, static_cast<std::uint64_t>(t));
      auto want_lo = oracle::min_last(w, j);
      auto want_hi = oracle::max_first(w, j);
      ASSERT_EQ(lo.exists, want_lo.has_value());
      ASSERT_EQ(hi.exists, want_hi.has_value());
      if (want_lo && !lo.run.aborted) ASSERT_EQ(lo.value, want_lo);
      if (want_hi && !hi.run.aborted) ASSERT_EQ(hi.value, want_hi);
    }
  }
}

TEST(Agreement, RatesAboveOneMinusDelta) {
  for (std::size_t j = 1; j <= 3; ++j) {
    AgreementSweep sweep;
    sweep.j = j;
    sweep.trials = 300;
    AgreementReport r = agreement_sweep(sweep);
    EXPECT_GE(r.min_last_rate(), 1.0 - sweep.delta) << j;
    EXPECT_GE(r.max_first_rate(), 1.0 - sweep.delta) << j;
  }
}

}  // namespace
}  // namespace advkit::randsearch
