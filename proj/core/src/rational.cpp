#include "advkit/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <algorithm>

#include "advkit/errors.hpp"

namespace advkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(long long k) {
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) r *= 10;
  return r;
}

[[noreturn]] void bad(std::string_view text) {
  throw ParseError(0, "not a number: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view es = s.substr(e + 1);
    bool eneg = false;
    if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
      eneg = es.front() == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 6) bad(original);
    long long v = 0;
    std::from_chars(es.data(), es.data() + es.size(), v);
    exp10 = eneg ? -v : v;
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad(original);
  if (!int_part.empty() && !all_digits(int_part)) bad(original);
  if (!frac_part.empty() && !all_digits(frac_part)) bad(original);
  // cpp_int reads a leading 0 as an octal prefix.
  std::string all = std::string(int_part) + std::string(frac_part);
  all.erase(0, std::min(all.find_first_not_of('0'), all.size() - 1));
  BigInt digits(all);
  exp10 -= static_cast<long long>(frac_part.size());
  Rational r(digits);
  if (exp10 > 0) r *= Rational(pow10(exp10));
  if (exp10 < 0) r /= Rational(pow10(-exp10));
  return negative ? Rational(-r) : r;
}

// base^k for integer k (negative allowed, base nonzero).
Rational int_pow(const Rational& base, long long k) {
  using boost::multiprecision::pow;
  auto e = static_cast<unsigned>(k < 0 ? -k : k);
  BigInt num = pow(boost::multiprecision::numerator(base), e);
  BigInt den = pow(boost::multiprecision::denominator(base), e);
  return k < 0 ? Rational(den, num) : Rational(num, den);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(s.substr(0, slash)), text);
    Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(s, text);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string format_rational(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double RationalPower::value() const { return std::exp(log_value()); }

double RationalPower::log_value() const {
  // Split num/den to keep huge rationals finite in log space.
  double ln_num = std::log(boost::multiprecision::numerator(base).convert_to<double>());
  double ln_den = std::log(boost::multiprecision::denominator(base).convert_to<double>());
  return to_double(exponent) * (ln_num - ln_den);
}

std::optional<int> compare_powers(const RationalPower& lhs, const RationalPower& rhs, std::uint64_t max_exponent) {
  if (lhs.base <= 0 || rhs.base <= 0) throw InvalidArgument("compare_powers: bases must be positive");
  const BigInt& d1 = boost::multiprecision::denominator(lhs.exponent);
  const BigInt& d2 = boost::multiprecision::denominator(rhs.exponent);
  BigInt l = boost::multiprecision::lcm(d1, d2);
  Rational k1 = lhs.exponent * Rational(l);
  Rational k2 = rhs.exponent * Rational(l);
  BigInt i1 = boost::multiprecision::numerator(k1);
  BigInt i2 = boost::multiprecision::numerator(k2);
  BigInt cap = max_exponent;
  if (boost::multiprecision::abs(i1) > cap || boost::multiprecision::abs(i2) > cap) return std::nullopt;
  Rational a = int_pow(lhs.base, i1.convert_to<long long>());
  Rational b = int_pow(rhs.base, i2.convert_to<long long>());
  if (a < b) return -1;
  if (a > b) return 1;
  return 0;
}

ExactReal ExactReal::from_rational(const Rational& r) {
  return ExactReal{to_double(r), RationalPower{r, Rational(1)}};
}

ExactReal ExactReal::power(const Rational& base, const Rational& exponent) {
  RationalPower p{base, exponent};
  return ExactReal{p.value(), p};
}

ExactReal ExactReal::from_double(double v) { return ExactReal{v, std::nullopt}; }

ExactReal parse_real(std::string_view text) {
  std::string_view s = trim(text);
  if (s.starts_with("sqrt(") && s.ends_with(")")) {
    Rational base = parse_rational(s.substr(5, s.size() - 6));
    if (base <= 0) throw ParseError(0, "sqrt of a non-positive value: '" + std::string(text) + "'");
    return ExactReal::power(base, Rational(1, 2));
  }
  if (auto caret = s.find('^'); caret != std::string_view::npos) {
    Rational base = parse_rational(s.substr(0, caret));
    std::string_view e = trim(s.substr(caret + 1));
    if (e.starts_with("(") && e.ends_with(")")) e = e.substr(1, e.size() - 2);
    Rational exponent = parse_rational(e);
    if (base <= 0) throw ParseError(0, "power of a non-positive base: '" + std::string(text) + "'");
    return ExactReal::power(base, exponent);
  }
  return ExactReal::from_rational(parse_rational(s));
}

Exponent Exponent::from_rational(const Rational& r) { return Exponent{to_double(r), r}; }

Exponent Exponent::from_double(double v) { return Exponent{v, std::nullopt}; }

Exponent parse_exponent(std::string_view text) { return Exponent::from_rational(parse_rational(text)); }

}  // namespace advkit
