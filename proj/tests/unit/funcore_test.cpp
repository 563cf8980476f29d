#include <gtest/gtest.h>

#include "advkit/errors.hpp"
#include "advkit/advsdp.hpp"
#include "advkit/funcore.hpp"

namespace advkit {
namespace {

constexpr const char* kOr2 =
    "alphabet: 0 1\n"
    "arity: 2\n"
    "codomain: 0 1\n"
    "00 -> 0\n"
    "01 -> 1\n"
    "10 -> 1\n"
    "11 -> 1\n";

int eval(const FiniteFunction& f, const Word& w) {
  auto i = f.find(w);
  EXPECT_TRUE(i.has_value());
  return f.boolean_value(*i) ? 1 : 0;
}

TEST(LoadFunction, OrTable) {
  FiniteFunction f = load_function(kOr2);
  EXPECT_EQ(f.size(), 4U);
  EXPECT_EQ(f.arity(), 2U);
  EXPECT_TRUE(f.is_boolean());
  EXPECT_EQ(eval(f, {0, 0}), 0);
  EXPECT_EQ(eval(f, {1, 0}), 1);
}

TEST(LoadFunction, DuplicateRowIsParseError) {
  EXPECT_THROW(load_function("alphabet: 0 1\narity: 2\ncodomain: 0 1\n00 -> 0\n00 -> 1\n"), ParseError);
}

TEST(LoadFunction, TernaryAlphabet) {
  std::string text = "alphabet: 0 1 2\narity: 2\ncodomain: 0 1\n";
  for (char a : {'0', '1', '2'}) {
    for (char b : {'0', '1', '2'}) text += std::string{a, b} + " -> " + (a == b ? "1" : "0") + "\n";
  }
  FiniteFunction f = load_function(text);
  EXPECT_EQ(f.size(), 9U);
}

TEST(LoadFunction, RoundTrip) {
  FiniteFunction f = load_function(kOr2);
  FiniteFunction g = load_function(serialize_function(f));
  EXPECT_EQ(g.domain(), f.domain());
  EXPECT_EQ(g.table(), f.table());
}

TEST(LoadFunction, RejectsUnknownSymbol) {
  EXPECT_THROW(load_function("alphabet: 0 1\narity: 1\ncodomain: 0 1\n2 -> 0\n"), Error);
}

TEST(GramAndMasks, OrEntries) {
  FiniteFunction f = load_function(kOr2);
  auto [gram, masks] = gram_and_masks(f);
  EXPECT_EQ(gram.entries(1, 2), 1.0);  // 01 vs 10
  EXPECT_EQ(gram.entries(0, 1), 0.0);  // 00 vs 01
  ASSERT_EQ(masks.masks.size(), 2U);
  EXPECT_EQ(masks.masks[0](0, 2), 1.0);  // 00 vs 10 differ in the first coordinate
  EXPECT_EQ(masks.masks[0](0, 1), 0.0);
}

TEST(GramAndMasks, ConstantIsAllOnes) {
  auto [gram, masks] = gram_and_masks(functions::constant(3, 1));
  EXPECT_TRUE((gram.entries.array() == 1.0).all());
}

TEST(GramAndMasks, StructuralProperties) {
  CounterRng rng(3);
  for (int t = 0; t < 30; ++t) {
    FiniteFunction f = functions::random_valued(1 + t % 4, 2 + t % 3, rng);
    auto [gram, masks] = gram_and_masks(f);
    const auto n = static_cast<Eigen::Index>(f.size());
    Eigen::MatrixXd any = Eigen::MatrixXd::Zero(n, n);
    for (const auto& d : masks.masks) {
      Eigen::MatrixXd fd = gram.entries.cwiseProduct(d);
      EXPECT_TRUE(fd.isApprox(fd.transpose()));
      EXPECT_EQ(fd.diagonal().cwiseAbs().sum(), 0.0);
      any = any.cwiseMax(d);
    }
    Eigen::MatrixXd diff = output_difference(f);
    for (Eigen::Index x = 0; x < n; ++x) {
      EXPECT_EQ(gram.entries(x, x), 1.0);
      for (Eigen::Index y = 0; y < n; ++y) {
        bool differ = f.output_index(static_cast<std::size_t>(x)) != f.output_index(static_cast<std::size_t>(y));
        EXPECT_EQ(diff(x, y), differ ? 1.0 : 0.0);
        if (x != y) EXPECT_EQ(any(x, y), 1.0);
        for (Eigen::Index z = 0; z < n; ++z) {
          if (gram.entries(x, y) == 1.0 && gram.entries(y, z) == 1.0) EXPECT_EQ(gram.entries(x, z), 1.0);
        }
      }
    }
  }
}

TEST(Build, OrOfIdentitiesIsOr2) {
  FiniteFunction g = build_or(functions::identity_bit(), functions::identity_bit());
  FiniteFunction or2 = functions::or_n(2);
  for (const Word& w : or2.domain()) EXPECT_EQ(eval(g, w), eval(or2, w));
}

TEST(Build, OrWithZeroIsSecond) {
  FiniteFunction f2 = functions::xor_n(2);
  FiniteFunction g = build_or(functions::constant(1, 0), f2);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Word& w = g.word(i);
    EXPECT_EQ(eval(g, w), eval(f2, Word(w.begin() + 1, w.end())));
  }
}

TEST(Build, ProductsMatchEnumeration) {
  CounterRng rng(11);
  for (int t = 0; t < 20; ++t) {
    FiniteFunction f1 = functions::random_boolean(1 + t % 3, rng);
    FiniteFunction f2 = functions::random_boolean(1 + (t / 3) % 3, rng);
    FiniteFunction g_or = build_or(f1, f2);
    FiniteFunction g_and = build_and(f1, f2);
    ASSERT_EQ(g_or.size(), f1.size() * f2.size());
    for (const Word& a : f1.domain()) {
      for (const Word& b : f2.domain()) {
        Word w = a;
        w.insert(w.end(), b.begin(), b.end());
        EXPECT_EQ(eval(g_or, w), eval(f1, a) | eval(f2, b));
        EXPECT_EQ(eval(g_and, w), eval(f1, a) & eval(f2, b));
      }
    }
  }
}

TEST(Build, AndOfOr2MatchesSixteenInputs) {
  FiniteFunction g = build_and(functions::or_n(2), functions::or_n(2));
  ASSERT_EQ(g.size(), 16U);
  for (const Word& w : g.domain()) EXPECT_EQ(eval(g, w), (w[0] | w[1]) & (w[2] | w[3]));
}

TEST(Build, SwitchGivesXor) {
  std::map<std::string, FiniteFunction> family{{"0", functions::coordinate(2, 1)},
                                               {"1", negate(functions::coordinate(2, 1))}};
  FiniteFunction h = build_switch(functions::coordinate(2, 0), family);
  for (const Word& w : h.domain()) EXPECT_EQ(eval(h, w), static_cast<int>(w[0] ^ w[1]));
}

TEST(Build, SwitchWithIdenticalFamilyIsThatFunction) {
  FiniteFunction g = functions::or_n(2);
  FiniteFunction f = functions::xor_n(2);
  FiniteFunction h = build_switch(f, {{"0", g}, {"1", g}});
  for (const Word& w : h.domain()) EXPECT_EQ(eval(h, w), eval(g, w));
  FiniteFunction hc = build_switch(functions::constant(2, 1), {{"1", functions::xor_n(2)}});
  for (const Word& w : hc.domain()) EXPECT_EQ(eval(hc, w), static_cast<int>(w[0] ^ w[1]));
}

TEST(Cap, LargeFunctionsAreRejected) {
  EXPECT_NO_THROW(enforce_sdp_cap(functions::or_n(5)));
  EXPECT_THROW(enforce_sdp_cap(functions::or_n(9)), CapExceeded);
}

}  // namespace
}  // namespace advkit
