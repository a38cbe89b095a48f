#pragma once

#include "crossings/errors.hpp"
#include "crossings/graph.hpp"
#include "crossings/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace crossings {

/// A convex embedding: vertex v sits at circle position positions()[v-1].
/// Validated bijection of 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> positions);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(pos_.size()); }
  int position_of(int v) const { return pos_[static_cast<std::size_t>(v) - 1]; }
  const std::vector<int>& positions() const { return pos_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> pos_;
};

/// Cyclic shift of every position by `shift` (mod n).
Permutation rotated(const Permutation& p, int shift);

/// Chord-interleaving test for two vertex-disjoint edges occupying positions
/// {pa,pb} and {pc,pd}: true iff, after sorting the four positions, one edge
/// holds ranks 1 and 3 and the other ranks 2 and 4.
bool is_crossing(int pa, int pb, int pc, int pd);

enum class CountAlgorithm { baseline, fast };

/// Number of 2-matchings of g whose chords interleave under p. `baseline`
/// scans all disjoint edge pairs; `fast` sweeps left endpoints with a binary
/// indexed tree over right endpoints and returns the identical value.
std::int64_t count_crossings(const Graph& g, const Permutation& p,
                             CountAlgorithm algorithm = CountAlgorithm::fast);

/// Overload on a raw position array (positions[v-1] = position of v), for
/// enumeration loops that avoid re-validating permutations.
std::int64_t count_crossings(const Graph& g, std::span<const int> positions,
                             CountAlgorithm algorithm = CountAlgorithm::fast);

struct PmfEntry {
  std::int64_t k = 0;
  Rational p;
  friend bool operator==(const PmfEntry&, const PmfEntry&) = default;
};

/// Exact probability mass function over crossing counts; entries sorted by k,
/// probabilities exactly summing to 1.
struct Pmf {
  std::vector<PmfEntry> entries;

  Rational total() const;
  Rational mean() const;
  Rational second_moment() const;
  Rational variance() const;

  friend bool operator==(const Pmf&, const Pmf&) = default;
};

enum class Reduction { none, fix_first };

inline constexpr int kDefaultEnumerationCap = 9;

/// Exact law of the crossing count under a uniform embedding, by full
/// enumeration of n! permutations, or of (n-1)! with vertex 1 held at
/// position 1 (the crossing count only depends on positions up to rotation,
/// so both modes agree).
Pmf exact_distribution(const Graph& g, Reduction reduce = Reduction::none,
                       int cap = kDefaultEnumerationCap);

/// Calls fn(positions) for every bijection of 1..n (positions[v-1] is the
/// position of vertex v).
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> pos(static_cast<std::size_t>(n));
  std::iota(pos.begin(), pos.end(), 1);
  do {
    fn(std::span<const int>(pos));
  } while (std::next_permutation(pos.begin(), pos.end()));
}

}  // namespace crossings
