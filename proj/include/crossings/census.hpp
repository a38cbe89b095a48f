#pragma once

#include "crossings/graph.hpp"

#include <cstdint>

namespace crossings {

/// Subgraph counts sufficient to evaluate the exact mean and variance of the
/// crossing count and the normal-approximation bound: r-matching counts m2,
/// m3, m4 plus the five mixed configuration counts s2..s7.
struct SubgraphCensus {
  int n = 0;
  std::int64_t m = 0;
  std::int64_t m2 = 0;
  std::int64_t m3 = 0;
  std::int64_t m4 = 0;
  std::int64_t s2 = 0;  // 2-edge path + two further edges, components pairwise disjoint
  std::int64_t s4 = 0;  // two vertex-disjoint 2-edge paths
  std::int64_t s5 = 0;  // 3-edge path + one disjoint edge
  std::int64_t s6 = 0;  // 4-edge path
  std::int64_t s7 = 0;  // 2-edge path + one disjoint edge
  int delta = 0;

  friend bool operator==(const SubgraphCensus&, const SubgraphCensus&) = default;
};

/// The five mixed configuration shapes counted by the census. The structural
/// definitions are frozen; the remaining union types of two 2-matchings are
/// plain r-matchings (counted as m2, m3, m4).
enum class ConfigType { C2, C4, C5, C6, C7 };

/// Exact number of r-subsets of pairwise vertex-disjoint edges, r in 1..4.
std::int64_t count_r_matchings(const Graph& g, int r);

std::int64_t count_config(const Graph& g, ConfigType t);

/// Full census via closed-form pattern counters (no subset enumeration);
/// roughly O(m^2) plus neighborhood-intersection work, usable for m in the
/// thousands.
SubgraphCensus census(const Graph& g);

/// Census from the per-family closed forms, evaluated without touching the
/// graph itself.
SubgraphCensus closed_form_census(FamilyId id);

}  // namespace crossings
