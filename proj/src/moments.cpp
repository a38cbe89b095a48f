#include "crossings/moments.hpp"

#include "crossings/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace crossings {

MomentReport moments_from_census(const SubgraphCensus& c) {
  MomentReport r;
  r.census = c;
  r.mean = Rational(c.m2, 3);
  r.second_moment = make_rational(2, 3) * c.m4 + make_rational(4, 5) * c.m3 +
                    make_rational(1, 3) * c.m2 + make_rational(4, 9) * c.s2 +
                    make_rational(7, 15) * c.s4 + make_rational(1, 5) * c.s5 +
                    make_rational(1, 6) * c.s6 + make_rational(1, 3) * c.s7;
  r.variance = r.second_moment - r.mean * r.mean;
  if (r.variance < 0)
    throw ValidationError("moments_from_census: census is inconsistent (negative variance)");
  r.sigma = std::sqrt(to_double(r.variance));
  return r;
}

Rational pair_probability(PairType t) {
  switch (t) {
    case PairType::A1: return make_rational(1, 9);
    case PairType::A2: return make_rational(1, 9);
    case PairType::A3: return make_rational(2, 15);
    case PairType::A4: return make_rational(7, 60);
    case PairType::A5: return make_rational(1, 10);
    case PairType::A6: return make_rational(1, 12);
    case PairType::A7: return make_rational(1, 6);
    case PairType::A8: return make_rational(1, 3);
  }
  throw ValidationError("pair_probability: unknown type");
}

int pair_multiplicity(PairType t) {
  // Ordered pairs (k, l) of 2-matchings whose union is one fixed subgraph of
  // the class:
  //   A1: a 4-matching splits into two disjoint 2-matchings 3 ways -> 6 ordered;
  //   A2: each 2-matching takes one path edge and one lone edge -> 4;
  //   A3: shared edge chosen 3 ways, remaining edges assigned 2 ways -> 6;
  //   A4: one edge from each path per 2-matching -> 4;
  //   A5: only the end edges of the path form a 2-matching -> 2;
  //   A6: only the alternating split works -> 2;
  //   A7: the shared edge must be the lone one -> 2;
  //   A8: k = l -> 1.
  switch (t) {
    case PairType::A1: return 6;
    case PairType::A2: return 4;
    case PairType::A3: return 6;
    case PairType::A4: return 4;
    case PairType::A5: return 2;
    case PairType::A6: return 2;
    case PairType::A7: return 2;
    case PairType::A8: return 1;
  }
  throw ValidationError("pair_multiplicity: unknown type");
}

namespace {

struct PairRepresentative {
  int n;
  std::array<Edge, 2> k;
  std::array<Edge, 2> l;
};

PairRepresentative representative(PairType t) {
  switch (t) {
    case PairType::A1: return {8, {Edge{1, 2}, Edge{3, 4}}, {Edge{5, 6}, Edge{7, 8}}};
    case PairType::A2: return {7, {Edge{1, 2}, Edge{4, 5}}, {Edge{2, 3}, Edge{6, 7}}};
    case PairType::A3: return {6, {Edge{1, 2}, Edge{3, 4}}, {Edge{1, 2}, Edge{5, 6}}};
    case PairType::A4: return {6, {Edge{1, 2}, Edge{4, 5}}, {Edge{2, 3}, Edge{5, 6}}};
    case PairType::A5: return {6, {Edge{1, 2}, Edge{3, 4}}, {Edge{2, 3}, Edge{5, 6}}};
    case PairType::A6: return {5, {Edge{1, 2}, Edge{3, 4}}, {Edge{2, 3}, Edge{4, 5}}};
    case PairType::A7: return {5, {Edge{1, 2}, Edge{4, 5}}, {Edge{2, 3}, Edge{4, 5}}};
    case PairType::A8: return {4, {Edge{1, 2}, Edge{3, 4}}, {Edge{1, 2}, Edge{3, 4}}};
  }
  throw ValidationError("verify_pair_probability: unknown type");
}

bool pair_crosses(const std::array<Edge, 2>& pair, std::span<const int> pos) {
  return is_crossing(pos[pair[0].u - 1], pos[pair[0].v - 1], pos[pair[1].u - 1],
                     pos[pair[1].v - 1]);
}

}  // namespace

Rational verify_pair_probability(PairType t) {
  const PairRepresentative rep = representative(t);
  BigInt hits = 0;
  for_each_permutation(rep.n, [&](std::span<const int> pos) {
    if (pair_crosses(rep.k, pos) && pair_crosses(rep.l, pos)) ++hits;
  });
  return Rational(hits, factorial(rep.n));
}

double kolmogorov_bound(const SubgraphCensus& c, double sigma) {
  if (c.m2 <= 0 || !(sigma > 0.0))
    throw CapabilityError("kolmogorov bound undefined: needs m2 > 0 and sigma > 0");
  const BigInt m2_sq = BigInt(c.m2) * c.m2;
  const Rational radicand = Rational(1) +
                            (Rational(32 * BigInt(c.delta), c.m) - 1) *
                                Rational(6 * BigInt(c.m4), m2_sq) +
                            Rational(BigInt(c.delta) * c.delta * c.m, 2 * BigInt(c.m2));
  if (radicand < 0) {
    throw CapabilityError("kolmogorov bound inapplicable: negative radicand " +
                          fraction_string(radicand));
  }
  const double prefactor =
      to_double(Rational(4 * BigInt(c.delta) * c.m * c.m2)) / (3.0 * sigma * sigma);
  const double linear = 6.0 * static_cast<double>(c.delta) * static_cast<double>(c.m) / sigma;
  return prefactor * (linear + std::sqrt(to_double(radicand)));
}

FamilyReference family_reference(FamilyId id) {
  if (id.size < family_min_size(id.family))
    throw ValidationError("family_reference: size below family minimum");
  FamilyReference ref;
  ref.id = id;
  const MomentReport moments = moments_from_census(closed_form_census(id));
  ref.mean = moments.mean;
  ref.variance = moments.variance;
  // Rate constants and the size thresholds above which their derivations
  // hold. The kite gets none: its scaled crossing count converges to the law
  // with density 2(1 - x), not to a normal.
  switch (id.family) {
    case Family::matching:
      ref.dk_constant = 1390;
      ref.constants_guaranteed = id.size >= 2;
      break;
    case Family::path:
      ref.dk_constant = 8159;
      ref.constants_guaranteed = id.size >= 14;
      break;
    case Family::cycle:
      ref.dk_constant = 6259;
      ref.constants_guaranteed = id.size >= 15;
      break;
    case Family::triangles:
      ref.dk_constant = 3290;
      ref.constants_guaranteed = id.size >= 3;
      break;
    case Family::kite:
      ref.dk_constant = std::nullopt;
      ref.constants_guaranteed = false;
      break;
  }
  return ref;
}

Pmf kite_law(int n) {
  if (n < 4) throw ValidationError("kite_law: needs n >= 4");
  Pmf pmf;
  const BigInt den = BigInt(n - 1) * (n - 2);
  for (int k = 0; k <= n - 3; ++k)
    pmf.entries.push_back({k, Rational(BigInt(2) * (n - 2 - k), den)});
  return pmf;
}

double kite_limit_cdf(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw ValidationError("kite_limit_cdf: x outside [0,1]");
  return 2.0 * x - x * x;
}

}  // namespace crossings
