#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace crossings {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction, always reduced to lowest terms with a
/// positive denominator. All closed-form moments and probabilities use this.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den) {
  return Rational(BigInt(num), BigInt(den));
}

/// Canonical "num/den" rendering ("3" stays "3/1" for a stable schema).
std::string fraction_string(const Rational& r);

double to_double(const Rational& r);

BigInt factorial(int n);

/// Binomial coefficient with the combinatorial convention C(n,k) = 0 for
/// n < k or n < 0. Overflow-checked; desk-scale inputs never trip it.
std::int64_t binomial(std::int64_t n, int k);

}  // namespace crossings
