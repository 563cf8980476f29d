#pragma once

// Symbolic divide-and-conquer recurrences. Classes are kept as
// n^exponent · log^log_power n; no numeric n is ever substituted.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "advkit/rational.hpp"

namespace advkit {

/// A(n) = a·A(n/b) + O(n^c log^p n). With `squared`, A(n) is the square of
/// the quantity of interest and master_solve returns the square-rooted class.
struct RecurrenceSpec {
  ExactReal a = ExactReal::from_rational(Rational(1));
  ExactReal b = ExactReal::from_rational(Rational(2));
  Exponent c = Exponent::from_rational(Rational(0));
  Rational p{0};
  bool squared = false;
};

struct BoundClass {
  double exponent = 0.0;
  std::optional<Rational> exact_exponent;
  Rational log_power{0};
  /// Master Theorem case that produced the class; 0 for classes given directly.
  int case_id = 0;
  /// Up to polylogarithmic factors.
  bool tilde = false;
  /// The case split was decided in floating point within 1e-12 of a boundary.
  bool near_boundary = false;

  static BoundClass poly_log(const Rational& exponent, const Rational& log_power = Rational(0), bool tilde = false);

  Exponent exponent_value() const { return Exponent{exponent, exact_exponent}; }
  /// The class times log^k n.
  BoundClass times_log(const Rational& k) const;
  /// The class squared / square-rooted.
  BoundClass squared() const;
  BoundClass sqrt() const;

  /// "O(n^1/2 log^1/2 n)", "O~(n^2/3)", "O(1)".
  std::string str() const;
};

/// Same asymptotic class. Tilde classes compare exponents only.
bool same_class(const BoundClass& lhs, const BoundClass& rhs);
/// The faster-growing of two classes (their sum, asymptotically).
BoundClass dominant(const BoundClass& lhs, const BoundClass& rhs);

/// Sign of log_b(a) − c; exact when a, b, c are rational powers.
struct CaseComparison {
  int sign = 0;
  bool exact = false;
  bool near_boundary = false;
};
CaseComparison compare_log_ratio(const ExactReal& a, const ExactReal& b, const Exponent& c);

/// Master Theorem. Throws InvalidArgument unless a > 0, b > 1, c ≥ 0, p ≥ 0.
BoundClass master_solve(const RecurrenceSpec& spec);

/// Adv(f)² ≤ Σ_i Adv(f_i)² + O(Q(aux))² with every branch at size n/shrink.
/// Throws UnsupportedForm when the shrinks differ or there are no branches.
BoundClass strategy1_bound(const std::vector<ExactReal>& branch_shrinks, const BoundClass& aux);

/// A(n) = coeff·A(n/b) + aux.
BoundClass strategy2_bound(const ExactReal& coeff, const ExactReal& b, const BoundClass& aux);

using CoefficientFn = std::function<ExactReal(std::uint64_t m)>;
/// m ↦ √(2m − 1).
ExactReal critical_coefficient(std::uint64_t m);

inline constexpr std::uint64_t kSplitFactorCap = 1'000'000;

/// Smallest m ≥ 2 with log_m(coeff_fn(m)) < target. Throws NotFound past the cap.
std::uint64_t min_splitting_factor(const Exponent& target, const CoefficientFn& coeff_fn = critical_coefficient,
                                   std::uint64_t cap = kSplitFactorCap);

struct HeadlineRow {
  std::string problem;
  std::optional<int> k;
  BoundClass derived;
  BoundClass stated;
  std::string derivation;
  bool match = false;
};

/// The four headline derivations (k-IS and k-CS for k = 1..max_k).
std::vector<HeadlineRow> headline_bounds(int max_k = 4);

}  // namespace advkit
