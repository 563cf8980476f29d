#include <cmath>

#include <gtest/gtest.h>

#include "advkit/advsdp.hpp"
#include "advkit/errors.hpp"

namespace advkit {
namespace {

constexpr double kRel = 1e-3;

TEST(AdvValue, OrMatchesRootN) {
  for (std::size_t n = 1; n <= 3; ++n) {
    AdvBracket b = adv_value(functions::or_n(n));
    const double root = std::sqrt(static_cast<double>(n));
    EXPECT_NEAR(b.upper, root, kRel * root) << n;
    EXPECT_NEAR(b.lower, root, kRel * root) << n;
    ASSERT_TRUE(b.certified_lower.has_value());
    EXPECT_LE(*b.certified_lower, b.upper + 1e-4);
  }
}

TEST(AdvValue, ConstantIsZero) {
  AdvBracket b = adv_value(functions::constant(2, 1));
  EXPECT_EQ(b.lower, 0.0);
  EXPECT_EQ(b.upper, 0.0);
}

TEST(AdvValue, XorIsArity) {
  AdvBracket b = adv_value(functions::xor_n(2));
  EXPECT_NEAR(b.upper, 2.0, 2 * kRel);
}

TEST(AdvValue, CrossCheckAgreesOnOr) {
  AdvBracket b = adv_value(functions::or_n(3), {}, true);
  ASSERT_TRUE(b.single_family.has_value());
  EXPECT_NEAR(*b.single_family, b.upper, 1e-3);
  EXPECT_FALSE(b.solver_defect);
}

TEST(AdvValue, RestrictionNeverIncreases) {
  FiniteFunction f = functions::or_n(3);
  const double full = adv_value(f).upper;
  CounterRng rng(5);
  for (int t = 0; t < 5; ++t) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (rng.bernoulli(0.7)) keep.push_back(i);
    }
    if (keep.empty()) continue;
    EXPECT_LE(adv_value(f.restricted(keep)).upper, full + 1e-4);
  }
}

TEST(Gamma2, OrTargetIsRootTwo) {
  FiniteFunction f = functions::or_n(2);
  auto [gram, masks] = gram_and_masks(f);
  Gamma2Result r = gamma2_filtered(output_difference(f), masks.masks);
  EXPECT_NEAR(r.value, std::sqrt(2.0), kRel * std::sqrt(2.0));
  EXPECT_NO_THROW(validate_gamma2_solution(r.solution, output_difference(f), masks.masks, 1e-3));
}

TEST(Gamma2, ZeroTarget) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
  Gamma2Result r = gamma2_filtered(a, {Eigen::MatrixXd::Ones(3, 3)});
  EXPECT_NEAR(r.value, 0.0, 1e-9);
}

TEST(Gamma2, IdentityBitIsOne) {
  FiniteFunction f = functions::identity_bit();
  auto [gram, masks] = gram_and_masks(f);
  EXPECT_NEAR(gamma2_filtered(output_difference(f), masks.masks).value, 1.0, kRel);
}

TEST(Gamma2, MaskedNonzeroPairIsInfeasible) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Ones(2, 2);
  Eigen::MatrixXd z = Eigen::MatrixXd::Ones(2, 2);
  z(0, 1) = 0.0;
  EXPECT_THROW(gamma2_filtered(a, {z}), InfeasibleProgram);
}

TEST(Gamma2, TinyBudgetThrows) {
  FiniteFunction f = functions::or_n(2);
  auto [gram, masks] = gram_and_masks(f);
  EXPECT_THROW(gamma2_filtered(output_difference(f), masks.masks, SolveOptions{1e-12, 3}), SolverBudgetExceeded);
}

TEST(Certify, OrCertificateIsExact) {
  for (std::size_t n = 1; n <= 6; ++n) {
    FiniteFunction f = functions::or_n(n);
    EXPECT_NEAR(adv_lower_certify(f, or_certificate(f)), std::sqrt(static_cast<double>(n)), 1e-9);
  }
}

TEST(Certify, ZeroMatrixGivesZero) {
  FiniteFunction f = functions::or_n(2);
  EXPECT_EQ(adv_lower_certify(f, AdversaryMatrix{Eigen::MatrixXd::Zero(4, 4)}), 0.0);
}

TEST(Certify, XorWithDifferenceMatrix) {
  FiniteFunction f = functions::xor_n(2);
  EXPECT_NEAR(adv_lower_certify(f, AdversaryMatrix{output_difference(f)}), 2.0, 1e-12);
}

TEST(Certify, ScaleInvariant) {
  FiniteFunction f = functions::or_n(3);
  AdversaryMatrix g = or_certificate(f);
  const double base = adv_lower_certify(f, g);
  for (double c : {0.5, 3.0, 1e3}) EXPECT_DOUBLE_EQ(adv_lower_certify(f, AdversaryMatrix{c * g.gamma}), base);
}

TEST(Certify, RejectsEqualOutputEntry) {
  FiniteFunction f = functions::or_n(2);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
  g(1, 2) = g(2, 1) = 1.0;  // f(01) = f(10)
  EXPECT_THROW(adv_lower_certify(f, AdversaryMatrix{g}), InvalidCertificate);
}

TEST(Certify, NeverExceedsSdpValue) {
  CounterRng rng(17);
  for (FiniteFunction f : {functions::or_n(2), functions::xor_n(2), functions::and_n(3), functions::or_n(4)}) {
    const double upper = adv_value(f).upper;
    Eigen::MatrixXd mask = output_difference(f);
    const auto n = mask.rows();
    for (int t = 0; t < 200; ++t) {
      Eigen::MatrixXd g(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) g(i, j) = g(j, i) = (rng.uniform01() - 0.5) * mask(i, j);
      }
      if (g.isZero()) continue;
      EXPECT_LE(adv_lower_certify(f, AdversaryMatrix{g}), upper + 1e-4);
    }
  }
}

TEST(SpectralNorm, SmallCases) {
  EXPECT_NEAR(spectral_norm(Eigen::MatrixXd::Identity(3, 3)), 1.0, 1e-12);
  EXPECT_NEAR(spectral_norm(Eigen::MatrixXd::Ones(4, 4)), 4.0, 1e-12);
  Eigen::MatrixXd p(2, 2);
  p << 0, 1, 1, 0;
  EXPECT_NEAR(spectral_norm(p), 1.0, 1e-12);
}

TEST(SpectralNorm, MatchesSvdOnRectangles) {
  CounterRng rng(2);
  for (int t = 0; t < 20; ++t) {
    Eigen::MatrixXd m(2 + t % 4, 3 + t % 3);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform01() * 2 - 1;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    EXPECT_NEAR(spectral_norm(m), svd.singularValues()(0), 1e-10);
  }
}

}  // namespace
}  // namespace advkit
