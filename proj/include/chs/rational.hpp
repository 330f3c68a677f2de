#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chs {

/// Arbitrary-precision integer. Walk counts and centralizer sizes overflow
/// 64 bits well inside desk scale, so these are mandatory, not optional.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept canonical by the backend:
/// gcd(|num|, den) = 1 and den > 0.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Fixed interchange format "num/den", denominator always printed.
inline std::string to_fraction_string(const Rational& q) {
  return rational_num(q).str() + "/" + rational_den(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.convert_to<double>(); }

inline BigInt int_pow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp != 0) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

/// binomial(n, k) for nonnegative arguments; 0 when k > n.
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace detail {

/// Convert a BigInt into the numeric type used by a polynomial evaluation
/// route (double for the float routes, Rational for the exact ones).
template <typename T>
inline T to_value(const BigInt& z) {
  return z.template convert_to<T>();
}

template <>
inline Rational to_value<Rational>(const BigInt& z) {
  return Rational(z);
}

}  // namespace detail

}  // namespace chs
