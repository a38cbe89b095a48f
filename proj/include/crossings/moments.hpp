#pragma once

#include "crossings/census.hpp"
#include "crossings/embedding.hpp"
#include "crossings/rational.hpp"

#include <optional>

namespace crossings {

/// Exact mean/variance of the crossing count, plus sigma as a double
/// (relative error of the square root below 1e-12; exactness stays in the
/// Rational fields).
struct MomentReport {
  Rational mean;
  Rational second_moment;
  Rational variance;
  double sigma = 0.0;
  SubgraphCensus census;
};

MomentReport moments_from_census(const SubgraphCensus& c);

/// Joint-crossing event classes for an ordered pair of 2-matchings,
/// classified by the shape of their union: A1 = four disjoint edges,
/// A2 = 2-edge path + two disjoint edges, A3 = three disjoint edges,
/// A4 = two disjoint 2-edge paths, A5 = 3-edge path + disjoint edge,
/// A6 = 4-edge path, A7 = 2-edge path + disjoint edge, A8 = the pair itself.
enum class PairType { A1, A2, A3, A4, A5, A6, A7, A8 };

/// P(both 2-matchings of the class representative cross) under a uniform
/// embedding. Fixed exact constants.
Rational pair_probability(PairType t);

/// Number of ordered pairs of 2-matchings whose union realizes one subgraph
/// of the class. Multiplying by pair_probability reproduces the second-moment
/// coefficients.
int pair_multiplicity(PairType t);

/// Recomputes pair_probability(t) from scratch by enumerating every ordering
/// of the canonical representative's vertex set (at most 8! orderings) and
/// counting those where both designated 2-matchings cross.
Rational verify_pair_probability(PairType t);

/// Upper bound on the Kolmogorov distance between the standardized crossing
/// count and a standard normal, evaluated from the census. Throws
/// CapabilityError when undefined (m2 = 0 or sigma <= 0) or when the radicand
/// is negative (reported, never clamped). The radicand's sign is decided in
/// exact arithmetic.
double kolmogorov_bound(const SubgraphCensus& c, double sigma);

/// Closed-form reference data for a graph family: exact moment polynomials
/// and, for the four families with a proven normal limit, the constant C of
/// the d_K <= C/sqrt(n) rate. `constants_guaranteed` is false below the size
/// threshold where the rate derivation holds (and always for the kite, whose
/// limit is not normal).
struct FamilyReference {
  FamilyId id;
  Rational mean;
  Rational variance;
  std::optional<int> dk_constant;
  bool constants_guaranteed = false;
};

FamilyReference family_reference(FamilyId id);

/// Exact crossing-count law of the kite on n vertices:
/// P(X = k) = 2(n-2-k) / ((n-1)(n-2)) for k = 0..n-3.
Pmf kite_law(int n);

/// Limit CDF of X/n for the kite: F(x) = 2x - x^2 on [0,1].
double kite_limit_cdf(double x);

}  // namespace crossings
