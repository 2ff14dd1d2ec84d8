#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace conlag {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Rising factorial m (m+1) ... (m+n-1); equals 1 for n = 0.
inline Integer rising_factorial(unsigned m, unsigned n) {
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= m + i;
  return r;
}

inline Rational pow(const Rational& base, int exponent) {
  Rational r = 1;
  Rational b = exponent < 0 ? Rational(1) / base : base;
  unsigned e = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline int sign_power(unsigned k) { return (k % 2 == 0) ? 1 : -1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace conlag
