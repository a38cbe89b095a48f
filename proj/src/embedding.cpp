#include "crossings/embedding.hpp"

#include <cassert>
#include <map>
#include <string>

namespace crossings {

Permutation::Permutation(std::vector<int> positions) : pos_(std::move(positions)) {
  const int n = static_cast<int>(pos_.size());
  if (n == 0) throw ValidationError("permutation: empty");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int p : pos_) {
    if (p < 1 || p > n || seen[p])
      throw ValidationError("permutation: not a bijection of 1..n");
    seen[p] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation rotated(const Permutation& p, int shift) {
  const int n = p.size();
  std::vector<int> v = p.positions();
  const int s = ((shift % n) + n) % n;
  for (int& x : v) x = (x - 1 + s) % n + 1;
  return Permutation(std::move(v));
}

bool is_crossing(int pa, int pb, int pc, int pd) {
  if (pa == pb || pa == pc || pa == pd || pb == pc || pb == pd || pc == pd)
    throw ValidationError("is_crossing: edges share a vertex");
  const int lo1 = std::min(pa, pb), hi1 = std::max(pa, pb);
  const int lo2 = std::min(pc, pd), hi2 = std::max(pc, pd);
  return (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) || (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
}

namespace {

bool interleaves(int lo1, int hi1, int lo2, int hi2) {
  return (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) || (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
}

std::int64_t count_baseline(const Graph& g, std::span<const int> pos) {
  const auto& edges = g.edges();
  const int m = g.edge_count();
  std::int64_t count = 0;
  for (int i = 0; i < m; ++i) {
    const Edge a = edges[i];
    const int lo1 = std::min(pos[a.u - 1], pos[a.v - 1]);
    const int hi1 = std::max(pos[a.u - 1], pos[a.v - 1]);
    for (int j = i + 1; j < m; ++j) {
      const Edge b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      const int lo2 = std::min(pos[b.u - 1], pos[b.v - 1]);
      const int hi2 = std::max(pos[b.u - 1], pos[b.v - 1]);
      if (interleaves(lo1, hi1, lo2, hi2)) ++count;
    }
  }
  return count;
}

class Fenwick {
 public:
  explicit Fenwick(int n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}
  void add(int i) {
    for (; i < static_cast<int>(tree_.size()); i += i & -i) ++tree_[i];
  }
  std::int64_t prefix(int i) const {
    std::int64_t s = 0;
    for (; i > 0; i -= i & -i) s += tree_[i];
    return s;
  }

 private:
  std::vector<std::int64_t> tree_;
};

// Sweep edges as position intervals [l, r] in increasing l. A pair crosses
// iff l_i < l_j < r_i < r_j, so edge j collects previously inserted right
// endpoints inside the open interval (l_j, r_j). Edges sharing a vertex have
// a coincident endpoint and never satisfy the strict chain, so no separate
// disjointness filter is needed; ties on l are handled by querying a whole
// tie group before inserting it.
std::int64_t count_fast(const Graph& g, std::span<const int> pos) {
  const int m = g.edge_count();
  std::vector<std::pair<int, int>> iv;
  iv.reserve(static_cast<std::size_t>(m));
  for (const Edge& e : g.edges()) {
    const int a = pos[e.u - 1], b = pos[e.v - 1];
    iv.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(iv.begin(), iv.end());
  Fenwick bit(g.vertex_count());
  std::int64_t count = 0;
  std::size_t i = 0;
  while (i < iv.size()) {
    std::size_t j = i;
    while (j < iv.size() && iv[j].first == iv[i].first) ++j;
    for (std::size_t k = i; k < j; ++k)
      count += bit.prefix(iv[k].second - 1) - bit.prefix(iv[k].first);
    for (std::size_t k = i; k < j; ++k) bit.add(iv[k].second);
    i = j;
  }
  return count;
}

}  // namespace

std::int64_t count_crossings(const Graph& g, std::span<const int> positions,
                             CountAlgorithm algorithm) {
  if (static_cast<int>(positions.size()) != g.vertex_count())
    throw ValidationError("count_crossings: permutation length does not match vertex count");
  return algorithm == CountAlgorithm::baseline ? count_baseline(g, positions)
                                               : count_fast(g, positions);
}

std::int64_t count_crossings(const Graph& g, const Permutation& p, CountAlgorithm algorithm) {
  return count_crossings(g, std::span<const int>(p.positions()), algorithm);
}

Rational Pmf::total() const {
  Rational t = 0;
  for (const auto& e : entries) t += e.p;
  return t;
}

Rational Pmf::mean() const {
  Rational t = 0;
  for (const auto& e : entries) t += e.p * e.k;
  return t;
}

Rational Pmf::second_moment() const {
  Rational t = 0;
  for (const auto& e : entries) t += e.p * e.k * e.k;
  return t;
}

Rational Pmf::variance() const {
  const Rational mu = mean();
  return second_moment() - mu * mu;
}

Pmf exact_distribution(const Graph& g, Reduction reduce, int cap) {
  const int n = g.vertex_count();
  if (n > cap) {
    throw CapabilityError("exact_distribution: n = " + std::to_string(n) +
                          " exceeds enumeration cap " + std::to_string(cap));
  }
  std::map<std::int64_t, std::int64_t> counts;
  BigInt total;
  if (reduce == Reduction::none) {
    for_each_permutation(n, [&](std::span<const int> pos) {
      ++counts[count_crossings(g, pos, CountAlgorithm::baseline)];
    });
    total = factorial(n);
  } else {
    // Crossing counts are rotation-invariant, so pinning vertex 1 at
    // position 1 keeps the law intact while enumerating (n-1)! maps.
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::iota(pos.begin(), pos.end(), 1);
    do {
      ++counts[count_crossings(g, std::span<const int>(pos), CountAlgorithm::baseline)];
    } while (std::next_permutation(pos.begin() + 1, pos.end()));
    total = factorial(n - 1);
  }
  Pmf pmf;
  pmf.entries.reserve(counts.size());
  for (const auto& [k, c] : counts) pmf.entries.push_back({k, Rational(BigInt(c), total)});
  return pmf;
}

}  // namespace crossings
