#include "advkit/recur.hpp"

#include <cmath>
#include <cstdio>

#include "advkit/errors.hpp"

namespace advkit {

namespace {

constexpr double kBoundaryTol = 1e-12;

double log_of(const ExactReal& r) { return r.exact ? r.exact->log_value() : std::log(r.value); }

std::string format_exponent(double value, const std::optional<Rational>& exact) {
  if (exact) return format_rational(*exact);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

int compare_exponents(const BoundClass& lhs, const BoundClass& rhs) {
  if (lhs.exact_exponent && rhs.exact_exponent) {
    if (*lhs.exact_exponent < *rhs.exact_exponent) return -1;
    return *lhs.exact_exponent > *rhs.exact_exponent ? 1 : 0;
  }
  double d = lhs.exponent - rhs.exponent;
  if (std::abs(d) <= kBoundaryTol) return 0;
  return d < 0 ? -1 : 1;
}

// Exact rational value of log_b(a) when one with denominator ≤ 1000 exists.
std::optional<Rational> exact_log_ratio(const ExactReal& a, const ExactReal& b) {
  if (!a.exact || !b.exact) return std::nullopt;
  double x = log_of(a) / log_of(b);
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents of x.
  BigInt h_prev = 1, h = static_cast<long long>(std::floor(x));
  BigInt k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 40; ++iter) {
    Rational candidate(h, k);
    RationalPower rhs{b.exact->base, b.exact->exponent * candidate};
    if (auto cmp = compare_powers(*a.exact, rhs); cmp && *cmp == 0) return candidate;
    if (frac < 1e-15 || k > 1000) break;
    double inv = 1.0 / frac;
    auto q = static_cast<long long>(std::floor(inv));
    frac = inv - std::floor(inv);
    BigInt h_next = q * h + h_prev;
    BigInt k_next = q * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

bool same_real(const ExactReal& lhs, const ExactReal& rhs) {
  if (lhs.exact && rhs.exact) {
    if (auto cmp = compare_powers(*lhs.exact, *rhs.exact)) return *cmp == 0;
  }
  return std::abs(log_of(lhs) - log_of(rhs)) <= kBoundaryTol;
}

}  // namespace

BoundClass BoundClass::poly_log(const Rational& exponent, const Rational& log_power, bool tilde) {
  BoundClass b;
  b.exponent = to_double(exponent);
  b.exact_exponent = exponent;
  b.log_power = log_power;
  b.tilde = tilde;
  return b;
}

BoundClass BoundClass::times_log(const Rational& k) const {
  BoundClass b = *this;
  b.log_power += k;
  return b;
}

BoundClass BoundClass::squared() const {
  BoundClass b = *this;
  b.exponent *= 2;
  if (b.exact_exponent) *b.exact_exponent *= 2;
  b.log_power *= 2;
  return b;
}

BoundClass BoundClass::sqrt() const {
  BoundClass b = *this;
  b.exponent /= 2;
  if (b.exact_exponent) *b.exact_exponent /= 2;
  b.log_power /= 2;
  return b;
}

std::string BoundClass::str() const {
  std::string n_part;
  bool zero_exp = exact_exponent ? *exact_exponent == 0 : std::abs(exponent) <= kBoundaryTol;
  bool unit_exp = exact_exponent ? *exact_exponent == 1 : false;
  if (!zero_exp) n_part = unit_exp ? "n" : "n^" + format_exponent(exponent, exact_exponent);
  std::string log_part;
  if (!tilde && log_power != 0) log_part = log_power == 1 ? "log n" : "log^" + format_rational(log_power) + " n";
  std::string body = n_part;
  if (!log_part.empty()) body += (body.empty() ? "" : " ") + log_part;
  if (body.empty()) body = "1";
  return (tilde ? "O~(" : "O(") + body + ")";
}

bool same_class(const BoundClass& lhs, const BoundClass& rhs) {
  if (compare_exponents(lhs, rhs) != 0) return false;
  if (lhs.tilde || rhs.tilde) return true;
  return lhs.log_power == rhs.log_power;
}

BoundClass dominant(const BoundClass& lhs, const BoundClass& rhs) {
  int cmp = compare_exponents(lhs, rhs);
  BoundClass out = cmp > 0 ? lhs : cmp < 0 ? rhs : (lhs.log_power >= rhs.log_power ? lhs : rhs);
  out.tilde = lhs.tilde || rhs.tilde;
  out.case_id = 0;
  return out;
}

CaseComparison compare_log_ratio(const ExactReal& a, const ExactReal& b, const Exponent& c) {
  if (a.exact && b.exact && c.exact) {
    RationalPower rhs{b.exact->base, b.exact->exponent * *c.exact};
    if (auto cmp = compare_powers(*a.exact, rhs)) return {*cmp, true, false};
  }
  double d = log_of(a) / log_of(b) - c.value;
  if (std::abs(d) <= kBoundaryTol) return {0, false, true};
  return {d < 0 ? -1 : 1, false, false};
}

BoundClass master_solve(const RecurrenceSpec& spec) {
  if (!(spec.a.value > 0)) throw InvalidArgument("master_solve: a must be positive");
  if (!(spec.b.value > 1)) throw InvalidArgument("master_solve: b must exceed 1");
  if (!(spec.c.value >= 0)) throw InvalidArgument("master_solve: c must be non-negative");
  if (spec.p < 0) throw InvalidArgument("master_solve: p must be non-negative");

  CaseComparison cmp = compare_log_ratio(spec.a, spec.b, spec.c);
  BoundClass out;
  out.near_boundary = cmp.near_boundary;
  if (cmp.sign > 0) {
    out.case_id = 1;
    out.exponent = log_of(spec.a) / log_of(spec.b);
    out.exact_exponent = exact_log_ratio(spec.a, spec.b);
    if (out.exact_exponent) out.exponent = to_double(*out.exact_exponent);
    out.log_power = 0;
  } else if (cmp.sign == 0) {
    out.case_id = 2;
    out.exponent = spec.c.value;
    out.exact_exponent = spec.c.exact;
    out.log_power = spec.p + 1;
  } else {
    out.case_id = 3;
    out.exponent = spec.c.value;
    out.exact_exponent = spec.c.exact;
    out.log_power = spec.p;
  }
  return spec.squared ? out.sqrt() : out;
}

BoundClass strategy1_bound(const std::vector<ExactReal>& branch_shrinks, const BoundClass& aux) {
  if (branch_shrinks.empty()) throw UnsupportedForm("strategy1_bound: no branches");
  for (const auto& s : branch_shrinks) {
    if (!same_real(s, branch_shrinks.front())) {
      throw UnsupportedForm("strategy1_bound: branches shrink by different factors");
    }
  }
  BoundClass aux2 = aux.squared();
  RecurrenceSpec spec;
  spec.a = ExactReal::from_rational(Rational(static_cast<long long>(branch_shrinks.size())));
  spec.b = branch_shrinks.front();
  spec.c = aux2.exponent_value();
  spec.p = aux2.log_power;
  spec.squared = true;
  BoundClass out = master_solve(spec);
  out.tilde = aux.tilde;
  return out;
}

BoundClass strategy2_bound(const ExactReal& coeff, const ExactReal& b, const BoundClass& aux) {
  if (!(coeff.value > 0)) throw InvalidArgument("strategy2_bound: coefficient must be positive");
  RecurrenceSpec spec;
  spec.a = coeff;
  spec.b = b;
  spec.c = aux.exponent_value();
  spec.p = aux.log_power;
  BoundClass out = master_solve(spec);
  out.tilde = aux.tilde;
  return out;
}

ExactReal critical_coefficient(std::uint64_t m) {
  return ExactReal::power(Rational(static_cast<long long>(2 * m - 1)), Rational(1, 2));
}

std::uint64_t min_splitting_factor(const Exponent& target, const CoefficientFn& coeff_fn, std::uint64_t cap) {
  if (!(target.value > 0 && target.value < 1)) {
    throw InvalidArgument("min_splitting_factor: target must lie in (0, 1)");
  }
  for (std::uint64_t m = 2; m <= cap; ++m) {
    ExactReal b = ExactReal::from_rational(Rational(static_cast<long long>(m)));
    CaseComparison cmp = compare_log_ratio(coeff_fn(m), b, target);
    if (cmp.sign < 0) return m;
  }
  throw NotFound("min_splitting_factor: no m ≤ " + std::to_string(cap) + " reaches the target");
}

}  // namespace advkit
