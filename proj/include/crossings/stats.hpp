#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace crossings {

/// Standard normal CDF via the complementary error function,
/// Phi(x) = erfc(-x / sqrt(2)) / 2; absolute error well under 1e-12.
double std_normal_cdf(double x);

/// Elementwise (x - mean) / sd. sd must be positive.
std::vector<double> standardize(std::span<const std::int64_t> counts, double mean, double sd);

/// Exact sup-distance between the empirical CDF of a sorted sample and a
/// continuous reference CDF, via the two-sided order-statistics formula.
double empirical_sup_distance(std::span<const double> sorted_values,
                              const std::function<double(double)>& cdf);

/// empirical_sup_distance against the standard normal.
double empirical_dk(std::span<const double> sorted_w);

struct EmpiricalReport {
  std::int64_t samples = 0;
  double mean = 0.0;  // sample mean of the raw counts
  double sd = 0.0;    // sample standard deviation of the raw counts
  double dk_empirical = 0.0;
  std::uint64_t seed = 0;
  std::string graph_descriptor;
};

}  // namespace crossings
