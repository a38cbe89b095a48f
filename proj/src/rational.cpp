#include "crossings/rational.hpp"

#include "crossings/errors.hpp"

namespace crossings {

std::string fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt factorial(int n) {
  if (n < 0) throw ValidationError("factorial: negative argument");
  BigInt acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

std::int64_t binomial(std::int64_t n, int k) {
  if (k < 0) throw ValidationError("binomial: negative k");
  if (n < 0 || n < k) return 0;
  __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<__int128>(INT64_MAX))
      throw ValidationError("binomial: result exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace crossings
