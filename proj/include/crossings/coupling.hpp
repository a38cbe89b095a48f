#pragma once

#include "crossings/census.hpp"
#include "crossings/embedding.hpp"
#include "crossings/rng.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace crossings {

/// One draw of the coupled pair (X, Xs): a uniform embedding `perm`, a
/// uniform 2-matching `index` (as a pair of edge indices into the graph's
/// edge list), and the repaired embedding `perm_s` that is guaranteed to
/// cross at `index`. The vertex choice is always drawn so the sample space
/// is a fixed product; `choice_used` records whether it mattered.
struct CouplingSample {
  std::int64_t x = 0;
  std::int64_t x_s = 0;
  std::pair<int, int> index{0, 0};
  int vertex_choice = 0;  // 0..3, meaning u1/u2/v1/v2 of the role assignment
  bool choice_used = false;
  Permutation perm;
  Permutation perm_s;
};

/// Repeated coupled sampling against a fixed graph (caches the 2-matching
/// list).
class CouplingSampler {
 public:
  explicit CouplingSampler(const Graph& g);
  CouplingSample sample(Xoshiro256StarStar& rng) const;
  const std::vector<std::pair<int, int>>& two_matchings() const { return pairs_; }
  const Graph& graph() const { return *g_; }

 private:
  const Graph* g_;
  std::vector<std::pair<int, int>> pairs_;
};

CouplingSample sample_coupled(const Graph& g, std::uint64_t seed);

/// perm_s positions for a given embedding, 2-matching {e, f}, and vertex
/// choice in 0..3. When the pair already crosses the input is returned
/// unchanged; otherwise the four endpoint positions are read in cyclic order
/// (outer edge = "u" when nested, left edge = "u" when side by side) and one
/// of the two role-determined value swaps is applied. The result always
/// crosses at {e, f}.
std::vector<int> coupled_positions(std::span<const int> positions, Edge e, Edge f, int choice);

enum class TestFunction { identity, square, indicator };

struct SizeBiasCheck {
  Rational lhs;  // E[X f(X)]
  Rational rhs;  // E[X] * E[f(Xs)]
};

/// Exact verification of the size-bias identity by enumerating the full
/// product space (permutation x 2-matching x vertex choice) with exact
/// weights. `indicator_k` is used only for TestFunction::indicator.
SizeBiasCheck exact_size_bias_check(const Graph& g, TestFunction f, std::int64_t indicator_k = 0,
                                    int cap = kDefaultEnumerationCap);

struct ConditionalVariance {
  Rational value;
  bool coupling_defined = false;  // false when the graph has no 2-matching
};

/// Exact variance (over the uniform embedding) of the mean coupled increment
/// D(pi) = avg over (2-matching, vertex choice) of Xs - X.
ConditionalVariance conditional_diff_variance(const Graph& g, int cap = kDefaultEnumerationCap);

/// Closed-form upper bound on that variance:
/// 4 Delta^2 m^2 (1 + (32 Delta / m - 1) 6 m4 / m2^2 + Delta^2 m / (2 m2)).
double coupling_variance_bound(const SubgraphCensus& c);

}  // namespace crossings
