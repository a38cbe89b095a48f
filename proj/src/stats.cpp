#include "crossings/stats.hpp"

#include "crossings/errors.hpp"

#include <algorithm>
#include <cmath>

namespace crossings {

double std_normal_cdf(double x) {
  if (!std::isfinite(x)) throw ValidationError("std_normal_cdf: non-finite input");
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

std::vector<double> standardize(std::span<const std::int64_t> counts, double mean, double sd) {
  if (!(sd > 0.0)) throw ValidationError("standardize: degenerate variance (sd <= 0)");
  std::vector<double> w;
  w.reserve(counts.size());
  for (std::int64_t c : counts) w.push_back((static_cast<double>(c) - mean) / sd);
  return w;
}

double empirical_sup_distance(std::span<const double> sorted_values,
                              const std::function<double(double)>& cdf) {
  const std::size_t n = sorted_values.size();
  if (n == 0) throw ValidationError("empirical_sup_distance: empty sample");
  if (!std::is_sorted(sorted_values.begin(), sorted_values.end()))
    throw ValidationError("empirical_sup_distance: input must be sorted");
  double sup = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted_values[i]);
    const double above = static_cast<double>(i + 1) / static_cast<double>(n) - f;
    const double below = f - static_cast<double>(i) / static_cast<double>(n);
    sup = std::max({sup, above, below});
  }
  return sup;
}

double empirical_dk(std::span<const double> sorted_w) {
  return empirical_sup_distance(sorted_w, [](double x) { return std_normal_cdf(x); });
}

}  // namespace crossings
