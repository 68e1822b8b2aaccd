#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace fg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline std::uint64_t ipow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

inline BigInt floor_of(const Rational& x) {
  BigInt n = boost::multiprecision::numerator(x);
  BigInt d = boost::multiprecision::denominator(x);
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

inline BigInt ceil_of(const Rational& x) {
  BigInt f = floor_of(x);
  return Rational(f) == x ? f : f + 1;
}

/// Natural log of a positive big integer, accurate to double precision.
double ln(const BigInt& x);

/// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

std::string to_string(const Rational& x);

}  // namespace fg
