#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crossings {

/// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple graph on vertices 1..n. Construction validates the edge
/// list (no self-loops, no duplicates, endpoints in range) and normalizes it
/// to u < v, sorted lexicographically. Safe to share across threads.
class Graph {
 public:
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Sorted neighbor list of vertex v (1-based).
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

 private:
  Graph(int n, std::vector<Edge> edges, std::vector<std::vector<int>> adj)
      : n_(n), edges_(std::move(edges)), adj_(std::move(adj)) {}

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // adj_[0] unused
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

int max_degree(const Graph& g);

enum class Family { matching, path, cycle, triangles, kite };

/// A named graph family together with its size parameter. The parameter k
/// means: matching = number of disjoint edges (2k vertices), path/cycle =
/// number of vertices, triangles = number of disjoint triangles (3k
/// vertices), kite = number of vertices.
struct FamilyId {
  Family family;
  int size = 0;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
int family_min_size(Family f);

/// Canonical labelings, fixed so seeded runs are reproducible across
/// releases:
///   matching k: edges (2i-1, 2i) for i = 1..k
///   path k:     edges (i, i+1) for i = 1..k-1
///   cycle k:    path edges plus (1, k)
///   triangles k: vertex triple (3i-2, 3i-1, 3i) fully connected, i = 1..k
///   kite k:     hub 1 joined to 2..k-1, plus the pendant edge (k-1, k)
Graph family_graph(FamilyId id);

/// Text format: optional '#' comment lines, then "n m", then exactly m lines
/// "u v". serialize emits the canonical sorted form; parse accepts either
/// endpoint order and normalizes.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

}  // namespace crossings
