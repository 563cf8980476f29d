#include <gtest/gtest.h>

#include "advkit/errors.hpp"
#include "advkit/rng.hpp"
#include "advkit/strings/instance_io.hpp"
#include "advkit/strings/minsub.hpp"
#include "advkit/strings/query_string.hpp"
#include "advkit/strings/regular.hpp"
#include "oracles.hpp"

namespace advkit::strings {
namespace {

SymbolString digits(const std::string& s) {
  SymbolString out;
  for (char c : s) out.push_back(c - '0');
  return out;
}

SymbolString chars(const std::string& s) {
  SymbolString out;
  for (char c : s) out.push_back(c == '*' ? kStar : static_cast<Symbol>(c));
  return out;
}

TEST(QueryString, CountsReadsAndSharesCounter) {
  QueryString q(digits("2012"));
  EXPECT_EQ(q.queries(), 0U);
  (void)q[0];
  (void)q[3];
  EXPECT_EQ(q.queries(), 2U);
  QueryString f = q.with_filter({RemovalMode::gt, 1});
  EXPECT_EQ(f[0], kStar);
  EXPECT_EQ(q.queries(), 3U);
  q.reset_queries();
  EXPECT_EQ(f.queries(), 0U);
}

TEST(QueryString, FiltersAreIdempotent) {
  QueryString q(chars("2*13"));
  RemovalFilter gt{RemovalMode::gt, '2'};
  QueryString once = q.with_filter(gt);
  QueryString twice = once.with_filter(gt);
  EXPECT_EQ(twice.filters().size(), 1U);
  EXPECT_EQ(once.read_all(), twice.read_all());
}

TEST(QueryString, RemovalTransformExample) {
  SymbolString x = {2, kStar, 1, 3};
  QueryString r = removal_transform(QueryString(x), 2, RemovalMode::gt);
  EXPECT_EQ(r.read_all(), (SymbolString{2, kStar, 1, kStar}));
}

TEST(BlockPartition, EvenAndBalanced) {
  auto even = BlockPartition::even(6, 3);
  EXPECT_EQ(even.begin(1), 2U);
  EXPECT_EQ(even.size(2), 2U);
  EXPECT_THROW(BlockPartition::even(7, 3), InvalidArgument);
  auto bal = BlockPartition::balanced(7, 3);
  EXPECT_EQ(bal.begin(0), 0U);
  EXPECT_EQ(bal.begin(1), 2U);
  EXPECT_EQ(bal.begin(2), 4U);
  EXPECT_EQ(bal.end(2), 7U);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(bal.block_of(i), i < 2 ? 0U : i < 4 ? 1U : 2U);
}

TEST(Regular, Examples) {
  EXPECT_TRUE(regular_decide(digits("22")));
  EXPECT_FALSE(regular_decide(digits("2012")));
  EXPECT_TRUE(regular_decide(digits("120021")));
  EXPECT_TRUE(regular_cross(digits("120021")));
  EXPECT_TRUE(regular_cross_brute(digits("120021")));
  EXPECT_THROW(regular_decide(digits("123")), InvalidArgument);
}

TEST(Regular, MatchesRegexOracleExhaustively) {
  for (std::size_t n = 1; n <= 8; ++n) {
    SymbolString x(n, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (auto& s : x) {
        s = static_cast<Symbol>(c % 3);
        c /= 3;
      }
      const bool expected = oracle::contains_two_zeros_two(x);
      ASSERT_EQ(regular_decide(x), expected);
      ASSERT_EQ(regular_divide(x), expected);
      ASSERT_EQ(regular_cross(x), regular_cross_brute(x));
      QueryString q(x);
      regular_decide(q);
      ASSERT_LE(q.queries(), n);
      QueryString qc(x);
      ASSERT_EQ(regular_cross(qc), regular_cross_brute(x));
      ASSERT_LE(qc.queries(), n);
    }
  }
}

TEST(Minsub, Examples) {
  EXPECT_TRUE(minsub_decide(chars("abab"), chars("ab")));
  EXPECT_FALSE(minsub_decide(chars("abab"), chars("ba")));
  EXPECT_TRUE(rotation_decide(chars("aba"), 2));
  EXPECT_FALSE(rotation_decide(chars("aba"), 0));
  EXPECT_FALSE(suffix_decide(chars("aba"), 0));
  EXPECT_TRUE(suffix_decide(chars("aba"), 2));
}

TEST(Minsub, ReductionsMatchEnumeration) {
  CounterRng rng(21);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + rng.uniform(9);
    const std::size_t a = 1 + rng.uniform(3);
    SymbolString x(n);
    for (auto& s : x) s = static_cast<Symbol>(rng.uniform(a));
    const std::size_t i = rng.uniform(n);
    ASSERT_EQ(rotation_decide(x, i), oracle::minimal_rotation(x, i));
    ASSERT_EQ(rotation_brute(x, i), oracle::minimal_rotation(x, i));
    ASSERT_EQ(suffix_decide(x, i), oracle::minimal_suffix(x, i));
    ASSERT_EQ(suffix_brute(x, i), oracle::minimal_suffix(x, i));
  }
}

TEST(Minsub, PositionsAndRecurrenceMatchOracle) {
  CounterRng rng(8);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = std::size_t{8} << rng.uniform(3);
    const std::size_t a = 2 + rng.uniform(3);
    SymbolString x(n), y(n / 2);
    for (auto& s : x) s = static_cast<Symbol>(rng.uniform(a));
    if (rng.bernoulli(0.5)) {
      std::size_t start = rng.uniform(n / 2 + 1);
      std::copy(x.begin() + static_cast<long>(start), x.begin() + static_cast<long>(start + n / 2), y.begin());
    } else {
      for (auto& s : y) s = static_cast<Symbol>(rng.uniform(a));
    }
    const bool expected = oracle::minimal_substring(x, y);
    ASSERT_EQ(minsub_decide(x, y), expected);
    ASSERT_EQ(minsub_divide(x, y), expected);
    ASSERT_EQ(minsub_recurrence_rhs(x, y), expected);
    ASSERT_EQ(minsub_cross_from_positions(x, y, minsub_positions(x, y)), minsub_cross(x, y));
  }
}

TEST(Minsub, PositionsOfSimpleInstance) {
  // y[0, 2) = "ab" occurs in x[0,4) at 0 and 2, in x[2,6) at 2 and 4.
  auto pos = minsub_positions(chars("abababcx"), chars("abab"));
  ASSERT_TRUE(pos.u1 && pos.v1 && pos.u2 && pos.v2);
  EXPECT_EQ(*pos.u1, 0U);
  EXPECT_EQ(*pos.v1, 2U);
  EXPECT_EQ(*pos.u2, 2U);
  EXPECT_EQ(*pos.v2, 4U);
}

TEST(Minsub, CountedReadsAreLinear) {
  QueryString x(chars("abab"));
  QueryString y(chars("ab"));
  EXPECT_TRUE(minsub_decide(x, y));
  EXPECT_LE(x.queries() + y.queries(), 6U);
}

TEST(InstanceIo, ParsesStringAndPairs) {
  auto one = load_instance("# comment\nstring: 2 * 1 3\n");
  ASSERT_TRUE(one.string);
  EXPECT_EQ(*one.string, (SymbolString{2, kStar, 1, 3}));
  auto pair = load_instance("x: ab\ny: ba\n");
  ASSERT_TRUE(pair.x && pair.y);
  EXPECT_EQ(pair.x->size(), 2U);
  EXPECT_EQ((*pair.x)[0], (*pair.y)[1]);
  EXPECT_LT((*pair.x)[0], (*pair.x)[1]);
  EXPECT_EQ(pair.format(*pair.x), "a b");
}

TEST(InstanceIo, DigitWordSplits) {
  auto inst = load_instance("string: 2012\n");
  EXPECT_EQ(*inst.string, (SymbolString{2, 0, 1, 2}));
  EXPECT_EQ(tokenize("10 3"), (std::vector<std::string>{"10", "3"}));
}

TEST(InstanceIo, ErrorsCarryLineNumbers) {
  try {
    load_instance("x: ab\nstring: ab\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
  EXPECT_THROW(load_instance("bogus: 1 2\n"), ParseError);
}

TEST(InstanceIo, RoundTrip) {
  auto inst = load_instance("x: c a b\ny: b b a\n");
  auto again = load_instance(serialize_instance(inst));
  EXPECT_EQ(*again.x, *inst.x);
  EXPECT_EQ(*again.y, *inst.y);
}

}  // namespace
}  // namespace advkit::strings
