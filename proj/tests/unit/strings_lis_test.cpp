#include <gtest/gtest.h>

#include "advkit/errors.hpp"
#include "advkit/rng.hpp"
#include "advkit/strings/lis.hpp"
#include "oracles.hpp"

namespace advkit::strings {
namespace {

const SymbolString kExample{2, kStar, 1, 3};

SymbolString random_string(CounterRng& rng, std::size_t n, std::size_t alphabet, double star_rate) {
  SymbolString x(n);
  for (auto& s : x) s = rng.bernoulli(star_rate) ? kStar : static_cast<Symbol>(rng.uniform(alphabet));
  return x;
}

TEST(Lis, Examples) {
  EXPECT_TRUE(lis_decide(SymbolString{3, 1, 2, 4}, 3));
  EXPECT_FALSE(lis_decide(SymbolString{3, 1, 2, 4}, 4));
  EXPECT_EQ(min_last(kExample, 2), Symbol{3});
  EXPECT_EQ(max_first(kExample, 2), Symbol{2});
  SymbolString stars(5, kStar);
  EXPECT_FALSE(lis_decide(stars, 1));
  EXPECT_FALSE(min_last(stars, 1).has_value());
  EXPECT_THROW(lis_decide(stars, 0), InvalidArgument);
}

TEST(Lis, MatchesSubsetEnumeration) {
  CounterRng rng(31);
  for (int t = 0; t < 3000; ++t) {
    SymbolString x = random_string(rng, rng.uniform(11), 2 + rng.uniform(5), 0.15);
    ASSERT_EQ(longest_increasing(x), oracle::longest_increasing(x));
    for (std::size_t j = 1; j <= 4; ++j) {
      ASSERT_EQ(min_last(x, j), oracle::min_last(x, j));
      ASSERT_EQ(max_first(x, j), oracle::max_first(x, j));
      ASSERT_EQ(lis_decompose(x, j), oracle::longest_increasing(x) >= j);
    }
  }
}

TEST(Lis, CountedDecideReadsEachPositionOnce) {
  QueryString q(SymbolString{5, 1, 4, 2, 3});
  EXPECT_TRUE(lis_decide(q, 3));
  EXPECT_EQ(q.queries(), 5U);
}

TEST(Classifier, MinLastExamples) {
  QueryString q(kExample);
  EXPECT_EQ(classify_min_last(q, 2, 3), Relation::equal);
  EXPECT_EQ(classify_min_last(q, 2, 5), Relation::less);
  EXPECT_EQ(classify_min_last(q, 2, 2), Relation::greater);
}

TEST(Classifier, AgreesWithExactValues) {
  CounterRng rng(13);
  for (int t = 0; t < 500; ++t) {
    SymbolString x = random_string(rng, 1 + rng.uniform(10), 6, 0.1);
    QueryString q(x);
    for (std::size_t j = 1; j <= 3; ++j) {
      auto ml = oracle::min_last(x, j);
      auto mf = oracle::max_first(x, j);
      if (!ml) continue;
      for (Symbol u = -1; u <= 6; ++u) {
        Relation want_l = *ml < u ? Relation::less : *ml == u ? Relation::equal : Relation::greater;
        Relation want_f = *mf < u ? Relation::less : *mf == u ? Relation::equal : Relation::greater;
        ASSERT_EQ(classify_min_last(q, j, u), want_l);
        ASSERT_EQ(classify_max_first(q, j, u), want_f);
      }
    }
  }
}

TEST(Classifier, ImpossibleRowThrows) {
  EXPECT_THROW(min_last_table(false, true), ImpossibleOracleAnswer);
  EXPECT_THROW(max_first_table(false, true), ImpossibleOracleAnswer);
  EXPECT_EQ(min_last_table(true, true), Relation::less);
  EXPECT_EQ(min_last_table(true, false), Relation::equal);
  EXPECT_EQ(min_last_table(false, false), Relation::greater);
}

TEST(Cross, MatchesSplitEnumeration) {
  CounterRng rng(5);
  for (int t = 0; t < 1000; ++t) {
    SymbolString x = random_string(rng, 2 + rng.uniform(8), 4, 0.1);
    const std::size_t h = left_half_size(x.size());
    SymbolString left(x.begin(), x.begin() + static_cast<long>(h));
    SymbolString right(x.begin() + static_cast<long>(h), x.end());
    for (std::size_t i = 1; i <= 2; ++i) {
      for (std::size_t j = 1; j <= 2; ++j) {
        auto l = oracle::min_last(left, i);
        auto r = oracle::max_first(right, j);
        ASSERT_EQ(lis_cross(x, i, j), l && r && *l < *r);
      }
    }
  }
}

}  // namespace
}  // namespace advkit::strings
