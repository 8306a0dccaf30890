#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eddeg {

// Arbitrary-precision integers and rationals.  mpq_rational keeps every value
// canonical: numerator/denominator coprime, denominator positive.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Int& n) { return n.sign(); }

inline Int int_pow(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rational rat_pow(const Rational& base, unsigned e) {
  Rational r = 1;
  Rational b = base;
  unsigned k = e;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Round to the nearest multiple of 2^-bits.  Sampled reals are truncated this
// way before entering any exact computation, so the data point itself is an
// exact rational and downstream root counts are certificates, not estimates.
inline Rational dyadic(double x, int bits = 40) {
  if (!std::isfinite(x) || std::fabs(x) > 1e12)
    throw std::invalid_argument("dyadic: value out of range");
  double scaled = std::ldexp(x, bits);
  // |x| <= 1e12 and bits <= 40 keeps |scaled| < 2^100; go through a string to
  // avoid int64 overflow for large magnitudes.
  double r = std::nearbyint(scaled);
  Int num;
  if (std::fabs(r) < 9e15) {
    num = Int(static_cast<long long>(r));
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0f", r);
    num = Int(std::string(buf));
  }
  return Rational(num, int_pow(2, static_cast<unsigned>(bits)));
}

}  // namespace eddeg
