#include "crossings/coupling.hpp"

#include "crossings/errors.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace crossings {

namespace {

std::vector<std::pair<int, int>> list_two_matchings(const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  const auto& edges = g.edges();
  const int m = g.edge_count();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Edge a = edges[i], b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

}  // namespace

std::vector<int> coupled_positions(std::span<const int> positions, Edge e, Edge f, int choice) {
  std::vector<int> out(positions.begin(), positions.end());
  const int pe1 = positions[e.u - 1], pe2 = positions[e.v - 1];
  const int pf1 = positions[f.u - 1], pf2 = positions[f.v - 1];
  if (is_crossing(pe1, pe2, pf1, pf2)) return out;

  // (position, vertex) for the four endpoints, in position order q1<q2<q3<q4.
  std::array<std::pair<int, int>, 4> q = {
      std::pair{pe1, e.u}, {pe2, e.v}, {pf1, f.u}, {pf2, f.v}};
  std::sort(q.begin(), q.end());
  const bool nested = (q[0].second == e.u || q[0].second == e.v) ==
                      (q[3].second == e.u || q[3].second == e.v);
  // Roles read along the circle so that u1 < v1 < v2 < u2 cyclically:
  // nested   -> u = outer edge {q1,q4}, v = inner edge {q2,q3};
  // side by side -> u = left edge, scanned from the cut between its
  // endpoints: u1 = q2, u2 = q1 (wrapping), v = right edge {q3,q4}.
  int u1, u2, v1, v2;
  if (nested) {
    u1 = q[0].second;
    u2 = q[3].second;
    v1 = q[1].second;
    v2 = q[2].second;
  } else {
    u1 = q[1].second;
    u2 = q[0].second;
    v1 = q[2].second;
    v2 = q[3].second;
  }
  // Choosing u1 or v1 swaps the positions of u2 and v2; choosing u2 or v2
  // swaps u1 and v1. Either swap makes the pair cross.
  const bool swap_high = (choice == 0 || choice == 2);
  const int a = swap_high ? u2 : u1;
  const int b = swap_high ? v2 : v1;
  std::swap(out[a - 1], out[b - 1]);
  return out;
}

CouplingSampler::CouplingSampler(const Graph& g) : g_(&g), pairs_(list_two_matchings(g)) {
  if (pairs_.empty())
    throw ValidationError("coupling: graph has no 2-matching, coupling undefined");
}

CouplingSample CouplingSampler::sample(Xoshiro256StarStar& rng) const {
  const Graph& g = *g_;
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()));
  std::iota(pos.begin(), pos.end(), 1);
  fisher_yates(pos, rng);
  const auto index = pairs_[rng.bounded(pairs_.size())];
  const int choice = static_cast<int>(rng.bounded(4));

  const Edge e = g.edges()[index.first];
  const Edge f = g.edges()[index.second];
  const bool already = is_crossing(pos[e.u - 1], pos[e.v - 1], pos[f.u - 1], pos[f.v - 1]);
  std::vector<int> pos_s = coupled_positions(pos, e, f, choice);

  CouplingSample s{.x = count_crossings(g, std::span<const int>(pos)),
                   .x_s = count_crossings(g, std::span<const int>(pos_s)),
                   .index = index,
                   .vertex_choice = choice,
                   .choice_used = !already,
                   .perm = Permutation(std::move(pos)),
                   .perm_s = Permutation(std::move(pos_s))};
  return s;
}

CouplingSample sample_coupled(const Graph& g, std::uint64_t seed) {
  Xoshiro256StarStar rng(substream_seed(seed, 0));
  return CouplingSampler(g).sample(rng);
}

namespace {

std::int64_t apply_test_function(TestFunction f, std::int64_t x, std::int64_t indicator_k) {
  switch (f) {
    case TestFunction::identity: return x;
    case TestFunction::square: return x * x;
    case TestFunction::indicator: return x == indicator_k ? 1 : 0;
  }
  throw ValidationError("unknown test function");
}

void require_within_cap(const Graph& g, int cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw CapabilityError(std::string(what) + ": n = " + std::to_string(g.vertex_count()) +
                          " exceeds enumeration cap " + std::to_string(cap));
  }
}

}  // namespace

SizeBiasCheck exact_size_bias_check(const Graph& g, TestFunction f, std::int64_t indicator_k,
                                    int cap) {
  require_within_cap(g, cap, "exact_size_bias_check");
  const auto pairs = list_two_matchings(g);
  if (pairs.empty())
    throw ValidationError("exact_size_bias_check: graph has no 2-matching");
  const int n = g.vertex_count();
  const std::int64_t m2 = static_cast<std::int64_t>(pairs.size());

  BigInt lhs_sum = 0;  // sum over pi of X f(X)
  BigInt rhs_sum = 0;  // sum over (pi, index, choice) of f(Xs)
  for_each_permutation(n, [&](std::span<const int> pos) {
    const std::int64_t x = count_crossings(g, pos, CountAlgorithm::baseline);
    lhs_sum += BigInt(x) * apply_test_function(f, x, indicator_k);
    for (const auto& [i, j] : pairs) {
      const Edge e = g.edges()[i];
      const Edge fe = g.edges()[j];
      for (int choice = 0; choice < 4; ++choice) {
        const std::vector<int> pos_s = coupled_positions(pos, e, fe, choice);
        const std::int64_t xs =
            count_crossings(g, std::span<const int>(pos_s), CountAlgorithm::baseline);
        rhs_sum += apply_test_function(f, xs, indicator_k);
      }
    }
  });
  const BigInt nfact = factorial(n);
  SizeBiasCheck check;
  check.lhs = Rational(lhs_sum, nfact);
  check.rhs = Rational(m2, 3) * Rational(rhs_sum, nfact * m2 * 4);
  return check;
}

ConditionalVariance conditional_diff_variance(const Graph& g, int cap) {
  require_within_cap(g, cap, "conditional_diff_variance");
  const auto pairs = list_two_matchings(g);
  if (pairs.empty()) return {Rational(0), false};
  const int n = g.vertex_count();
  const std::int64_t weight = 4 * static_cast<std::int64_t>(pairs.size());

  BigInt sum = 0;     // sum over pi of D_num(pi)
  BigInt sum_sq = 0;  // sum over pi of D_num(pi)^2, where D = D_num / weight
  for_each_permutation(n, [&](std::span<const int> pos) {
    const std::int64_t x = count_crossings(g, pos, CountAlgorithm::baseline);
    std::int64_t d_num = 0;
    for (const auto& [i, j] : pairs) {
      const Edge e = g.edges()[i];
      const Edge fe = g.edges()[j];
      for (int choice = 0; choice < 4; ++choice) {
        const std::vector<int> pos_s = coupled_positions(pos, e, fe, choice);
        d_num += count_crossings(g, std::span<const int>(pos_s), CountAlgorithm::baseline) - x;
      }
    }
    sum += d_num;
    sum_sq += BigInt(d_num) * d_num;
  });
  const BigInt nfact = factorial(n);
  const Rational mean = Rational(sum, nfact * weight);
  const Rational mean_sq = Rational(sum_sq, nfact * weight * weight);
  return {mean_sq - mean * mean, true};
}

double coupling_variance_bound(const SubgraphCensus& c) {
  if (c.m2 <= 0) throw CapabilityError("coupling_variance_bound: undefined for m2 = 0");
  const BigInt m2_sq = BigInt(c.m2) * c.m2;
  const Rational factor = Rational(1) +
                          (Rational(32 * BigInt(c.delta), c.m) - 1) *
                              Rational(6 * BigInt(c.m4), m2_sq) +
                          Rational(BigInt(c.delta) * c.delta * c.m, 2 * BigInt(c.m2));
  return to_double(Rational(4 * BigInt(c.delta) * c.delta * c.m * c.m) * factor);
}

}  // namespace crossings
