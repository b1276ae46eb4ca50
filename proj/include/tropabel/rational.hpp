#pragma once

// Exact integer and rational scalars. Both are arbitrary precision; the
// expression-template machinery is switched off so `auto` is always a value.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "tropabel/error.hpp"

namespace tropabel {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

/// Floor division with a positive or negative divisor, rounding towards -inf.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Euclidean remainder in [0, |b|).
inline Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += abs_int(b);
  return r;
}

inline Integer floor_of(const Rational& q) { return floor_div(numerator_of(q), denominator_of(q)); }

/// q - floor(q), always in [0, 1).
inline Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

inline Integer to_integer(const Rational& q) {
  require(is_integral(q), ErrorKind::Validation, "expected an integer, got a proper fraction");
  return numerator_of(q);
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline Integer parse_integer(std::string_view s) {
  auto valid = !s.empty();
  for (std::size_t i = 0; i < s.size() && valid; ++i) {
    char c = s[i];
    valid = (c >= '0' && c <= '9') || (i == 0 && (c == '-' || c == '+') && s.size() > 1);
  }
  require(valid, ErrorKind::Validation, "malformed integer '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

/// Accepts "p", "p/q" (q != 0). The result is reduced.
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer p = parse_integer(s.substr(0, slash));
  Integer q = parse_integer(s.substr(slash + 1));
  require(q != 0, ErrorKind::Validation, "zero denominator in '" + std::string(s) + "'");
  return Rational(p) / Rational(q);
}

} // namespace tropabel
