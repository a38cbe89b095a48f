#pragma once

#include "crossings/census.hpp"
#include "crossings/graph.hpp"

#include <cstdint>
#include <span>
#include <utility>

namespace crossings::testutil {

/// Independent census: enumerates every 2-, 3-, and 4-edge subset and
/// classifies it by component structure. Quartic in the edge count, only for
/// small graphs; kept deliberately separate from the production counters.
SubgraphCensus oracle_census(const Graph& g);

/// Series evaluation of the standard normal CDF (Maclaurin series times the
/// density), used as an oracle against the erfc-based implementation.
double phi_series(double x);

/// Inverse of the standard normal CDF by bisection.
double probit(double p);

/// Upper-tail critical value of the chi-square distribution via the
/// Wilson-Hilferty cube approximation.
double chi_square_critical(int df, double upper_tail);

/// Two-sample chi-square statistic over the pooled support, merging bins
/// until every pooled bin holds at least `min_bin` observations. Returns
/// {statistic, degrees of freedom}.
std::pair<double, int> two_sample_chi_square(std::span<const std::int64_t> a,
                                             std::span<const std::int64_t> b,
                                             std::int64_t min_bin = 10);

}  // namespace crossings::testutil
