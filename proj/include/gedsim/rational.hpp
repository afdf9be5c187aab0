#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gedsim {

/// Arbitrary-precision rational used by the exact LP path.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

/// Best rational approximation of x with denominator at most max_den
/// (continued-fraction convergents).
inline Rational rationalize(double x, std::int64_t max_den = 1'000'000) {
  const bool neg = x < 0;
  double rest = std::fabs(x);
  const double whole = std::floor(rest);
  if (whole > 9e15) return Rational(static_cast<std::int64_t>(neg ? -whole : whole));
  // h/k convergents
  boost::multiprecision::cpp_int h_prev = 1, h = static_cast<std::int64_t>(whole);
  boost::multiprecision::cpp_int k_prev = 0, k = 1;
  rest -= whole;
  for (int iter = 0; iter < 64 && rest > 1e-15; ++iter) {
    const double inv = 1.0 / rest;
    const double a = std::floor(inv);
    if (a > 9e15) break;
    const auto ai = static_cast<std::int64_t>(a);
    const boost::multiprecision::cpp_int k_next = ai * k + k_prev;
    if (k_next > max_den) break;
    const boost::multiprecision::cpp_int h_next = ai * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    rest = inv - a;
  }
  Rational r(h, k);
  return neg ? Rational(-r) : r;
}

}  // namespace gedsim
