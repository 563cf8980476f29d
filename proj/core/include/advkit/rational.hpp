#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace advkit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3", "-2/3", "0.125", "1e-9" exactly. Throws ParseError.
Rational parse_rational(std::string_view text);
double to_double(const Rational& r);
/// "2", "-1/2".
std::string format_rational(const Rational& r);

/// base^exponent with a positive rational base.
struct RationalPower {
  Rational base{1};
  Rational exponent{1};

  double value() const;
  double log_value() const;
};

/// Sign of lhs − rhs computed exactly, or nullopt when the common integer
/// exponent would exceed `max_exponent` (the powers get too large to form).
std::optional<int> compare_powers(const RationalPower& lhs, const RationalPower& rhs,
                                  std::uint64_t max_exponent = 4096);

/// A positive real known as a double and, when possible, as an exact
/// rational power.
struct ExactReal {
  double value = 0.0;
  std::optional<RationalPower> exact;

  static ExactReal from_rational(const Rational& r);
  static ExactReal power(const Rational& base, const Rational& exponent);
  static ExactReal from_double(double v);
};

/// Accepts rationals, "sqrt(x)" and "x^(p/q)" / "x^p" with rational x.
/// Anything else that parses as a floating-point number is kept inexact.
ExactReal parse_real(std::string_view text);

/// A real exponent with an optional exact rational value.
struct Exponent {
  double value = 0.0;
  std::optional<Rational> exact;

  static Exponent from_rational(const Rational& r);
  static Exponent from_double(double v);
};

Exponent parse_exponent(std::string_view text);

}  // namespace advkit
