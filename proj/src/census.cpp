#include "crossings/census.hpp"

#include "crossings/errors.hpp"
#include "crossings/rational.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <span>

namespace crossings {

namespace {

// Shared machinery for the pattern counters. Everything reduces to one
// primitive: the number of 2-matchings avoiding a small vertex set S, which
// is C(|E(G-S)|, 2) minus the 2-edge paths that survive in G - S. The
// latter is obtained by inclusion-exclusion over the (at most 4) vertices
// of S, since a 2-edge path has only 3 vertices.
class PatternCounter {
 public:
  explicit PatternCounter(const Graph& g) : g_(g), m_(g.edge_count()) {
    const int n = g.vertex_count();
    cherries_at_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
      std::int64_t c = binomial(g.degree(v), 2);
      for (int u : g.neighbors(v)) c += g.degree(u) - 1;
      cherries_at_[v] = c;
      p2_ += binomial(g.degree(v), 2);
    }
  }

  std::int64_t edges() const { return m_; }
  std::int64_t two_paths() const { return p2_; }

  std::int64_t codegree(int u, int v) const {
    const auto& a = g_.neighbors(u);
    const auto& b = g_.neighbors(v);
    std::int64_t c = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i < *j) ++i;
      else if (*j < *i) ++j;
      else { ++c; ++i; ++j; }
    }
    return c;
  }

  // 2-edge paths containing both u and v.
  std::int64_t cherries_through(int u, int v) const {
    std::int64_t c = codegree(u, v);
    if (g_.adjacent(u, v)) c += (g_.degree(u) - 1) + (g_.degree(v) - 1);
    return c;
  }

  // 2-edge paths on exactly the vertex set {a,b,c}: one of them is the hub.
  std::int64_t cherries_on(int a, int b, int c) const {
    std::int64_t r = 0;
    if (g_.adjacent(a, b) && g_.adjacent(a, c)) ++r;
    if (g_.adjacent(b, a) && g_.adjacent(b, c)) ++r;
    if (g_.adjacent(c, a) && g_.adjacent(c, b)) ++r;
    return r;
  }

  std::int64_t cherries_meeting(std::span<const int> s) const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      total += cherries_at_[s[i]];
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        total -= cherries_through(s[i], s[j]);
        for (std::size_t k = j + 1; k < s.size(); ++k)
          total += cherries_on(s[i], s[j], s[k]);
      }
    }
    return total;
  }

  std::int64_t edges_inside(std::span<const int> s) const {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (g_.adjacent(s[i], s[j])) ++c;
    return c;
  }

  std::int64_t edges_avoiding(std::span<const int> s) const {
    std::int64_t deg_sum = 0;
    for (int v : s) deg_sum += g_.degree(v);
    return m_ - deg_sum + edges_inside(s);
  }

  // 2-matchings of G - S.
  std::int64_t two_matchings_avoiding(std::span<const int> s) const {
    const std::int64_t me = edges_avoiding(s);
    return binomial(me, 2) - (p2_ - cherries_meeting(s));
  }

 private:
  const Graph& g_;
  std::int64_t m_ = 0;
  std::int64_t p2_ = 0;
  std::vector<std::int64_t> cherries_at_;
};

std::int64_t two_matching_count(const PatternCounter& pc, const Graph& g) {
  return binomial(g.edge_count(), 2) - pc.two_paths();
}

std::int64_t three_matching_count(const PatternCounter& pc, const Graph& g) {
  // Each 3-matching is (edge, disjoint 2-matching) in 3 ways.
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    const std::array<int, 2> s = {e.u, e.v};
    total += pc.two_matchings_avoiding(s);
  }
  assert(total % 3 == 0);
  return total / 3;
}

std::int64_t four_matching_count(const PatternCounter& pc, const Graph& g) {
  // Each 4-matching splits into an ordered pair of disjoint 2-matchings in
  // 6 ways.
  std::int64_t total = 0;
  const auto& edges = g.edges();
  const int m = g.edge_count();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Edge a = edges[i], b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      const std::array<int, 4> s = {a.u, a.v, b.u, b.v};
      total += pc.two_matchings_avoiding(s);
    }
  }
  assert(total % 6 == 0);
  return total / 6;
}

struct CherryAggregates {
  std::int64_t s7 = 0;
  std::int64_t s4_twice = 0;
  std::int64_t s2 = 0;
};

CherryAggregates cherry_sums(const PatternCounter& pc, const Graph& g) {
  CherryAggregates agg;
  for (int c = 1; c <= g.vertex_count(); ++c) {
    const auto& nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const std::array<int, 3> s = {nb[i], c, nb[j]};
        agg.s7 += pc.edges_avoiding(s);
        agg.s4_twice += pc.two_paths() - pc.cherries_meeting(s);
        agg.s2 += pc.two_matchings_avoiding(s);
      }
    }
  }
  assert(agg.s4_twice % 2 == 0);
  return agg;
}

std::int64_t three_path_plus_edge_count(const PatternCounter& pc, const Graph& g) {
  // 3-edge paths are generated once each via their middle edge.
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    for (int x : g.neighbors(e.u)) {
      if (x == e.v) continue;
      for (int y : g.neighbors(e.v)) {
        if (y == e.u || y == x) continue;
        const std::array<int, 4> s = {x, e.u, e.v, y};
        total += pc.edges_avoiding(s);
      }
    }
  }
  return total;
}

std::int64_t four_path_count(const PatternCounter& pc, const Graph& g) {
  // A 4-edge path has a unique middle vertex; extend an unordered pair of
  // its neighbors one step outward on each side.
  std::int64_t total = 0;
  for (int c = 1; c <= g.vertex_count(); ++c) {
    const auto& nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const int x = nb[i], y = nb[j];
        const std::int64_t adj_xy = g.adjacent(x, y) ? 1 : 0;
        const std::int64_t left = g.degree(x) - 1 - adj_xy;
        const std::int64_t right = g.degree(y) - 1 - adj_xy;
        // Subtract extensions that land on a common vertex (the hub c is
        // always a common neighbor).
        total += left * right - (pc.codegree(x, y) - 1);
      }
    }
  }
  return total;
}

std::int64_t checked(std::int64_t v) {
  assert(v >= 0);
  return v;
}

}  // namespace

std::int64_t count_r_matchings(const Graph& g, int r) {
  if (r < 1 || r > 4) throw ValidationError("count_r_matchings: r must be in 1..4");
  PatternCounter pc(g);
  switch (r) {
    case 1: return g.edge_count();
    case 2: return two_matching_count(pc, g);
    case 3: return three_matching_count(pc, g);
    default: return four_matching_count(pc, g);
  }
}

std::int64_t count_config(const Graph& g, ConfigType t) {
  PatternCounter pc(g);
  switch (t) {
    case ConfigType::C2: return cherry_sums(pc, g).s2;
    case ConfigType::C4: return cherry_sums(pc, g).s4_twice / 2;
    case ConfigType::C5: return three_path_plus_edge_count(pc, g);
    case ConfigType::C6: return four_path_count(pc, g);
    case ConfigType::C7: return cherry_sums(pc, g).s7;
  }
  throw ValidationError("count_config: unknown configuration type");
}

SubgraphCensus census(const Graph& g) {
  PatternCounter pc(g);
  SubgraphCensus c;
  c.n = g.vertex_count();
  c.m = g.edge_count();
  c.delta = max_degree(g);
  c.m2 = checked(two_matching_count(pc, g));
  c.m3 = checked(three_matching_count(pc, g));
  c.m4 = checked(four_matching_count(pc, g));
  const CherryAggregates agg = cherry_sums(pc, g);
  c.s7 = checked(agg.s7);
  c.s4 = checked(agg.s4_twice / 2);
  c.s2 = checked(agg.s2);
  c.s5 = checked(three_path_plus_edge_count(pc, g));
  c.s6 = checked(four_path_count(pc, g));
  return c;
}

SubgraphCensus closed_form_census(FamilyId id) {
  const std::int64_t k = id.size;
  if (id.size < family_min_size(id.family)) {
    throw ValidationError(std::string("closed_form_census: ") +
                          std::string(family_name(id.family)) + " size below minimum");
  }
  SubgraphCensus c;
  switch (id.family) {
    case Family::matching:
      c.n = static_cast<int>(2 * k);
      c.m = k;
      c.m2 = binomial(k, 2);
      c.m3 = binomial(k, 3);
      c.m4 = binomial(k, 4);
      c.delta = 1;
      break;
    case Family::path:
      c.n = static_cast<int>(k);
      c.m = k - 1;
      c.m2 = binomial(k - 2, 2);
      c.m3 = binomial(k - 3, 3);
      c.m4 = binomial(k - 4, 4);
      c.s2 = 3 * binomial(k - 4, 3);
      c.s4 = binomial(k - 4, 2);
      c.s5 = 2 * binomial(k - 4, 2);
      c.s6 = std::max<std::int64_t>(k - 4, 0);
      c.s7 = 2 * binomial(k - 3, 2);
      c.delta = k >= 3 ? 2 : 1;
      break;
    case Family::cycle:
      c.n = static_cast<int>(k);
      c.m = k;
      c.m2 = k * (k - 3) / 2;
      c.m3 = k * binomial(k - 4, 2) / 3;
      c.m4 = k * binomial(k - 5, 3) / 4;
      c.s2 = k * binomial(k - 5, 2);
      c.s4 = k >= 5 ? k * (k - 5) / 2 : 0;
      c.s5 = k >= 5 ? k * (k - 5) : 0;
      c.s6 = k >= 5 ? k : 0;
      c.s7 = k >= 4 ? k * (k - 4) : 0;
      c.delta = 2;
      break;
    case Family::triangles:
      c.n = static_cast<int>(3 * k);
      c.m = 3 * k;
      c.m2 = 9 * binomial(k, 2);
      c.m3 = 27 * binomial(k, 3);
      c.m4 = 81 * binomial(k, 4);
      c.s2 = 81 * binomial(k, 3);
      c.s4 = 9 * binomial(k, 2);
      c.s7 = 18 * binomial(k, 2);
      c.delta = 2;
      break;
    case Family::kite:
      c.n = static_cast<int>(k);
      c.m = k - 1;
      c.m2 = k - 3;
      c.s7 = binomial(k - 3, 2);
      c.delta = static_cast<int>(k) - 2;
      break;
  }
  return c;
}

}  // namespace crossings
