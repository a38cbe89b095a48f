#include "crossings/graph.hpp"

#include "crossings/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace crossings {

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw ValidationError("graph: vertex count must be positive");
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ValidationError("graph: endpoint out of range: (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") with n = " + std::to_string(n));
    }
    if (a == b) throw ValidationError("graph: self-loop at vertex " + std::to_string(a));
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second) {
      throw ValidationError("graph: duplicate edge (" + std::to_string(e.u) + ", " +
                            std::to_string(e.v) + ")");
    }
    norm.push_back(e);
  }
  std::sort(norm.begin(), norm.end());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : norm) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return Graph(n, std::move(norm), std::move(adj));
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::matching: return "matching";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::triangles: return "triangles";
    case Family::kite: return "kite";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::matching, Family::path, Family::cycle, Family::triangles, Family::kite})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

int family_min_size(Family f) {
  switch (f) {
    case Family::matching: return 1;
    case Family::path: return 2;
    case Family::cycle: return 3;
    case Family::triangles: return 1;
    case Family::kite: return 4;
  }
  return 1;
}

Graph family_graph(FamilyId id) {
  const int k = id.size;
  if (k < family_min_size(id.family)) {
    throw ValidationError(std::string("family ") + std::string(family_name(id.family)) +
                          ": size " + std::to_string(k) + " below minimum " +
                          std::to_string(family_min_size(id.family)));
  }
  std::vector<std::pair<int, int>> edges;
  switch (id.family) {
    case Family::matching:
      for (int i = 1; i <= k; ++i) edges.emplace_back(2 * i - 1, 2 * i);
      return build_graph(2 * k, edges);
    case Family::path:
      for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
      return build_graph(k, edges);
    case Family::cycle:
      for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, k);
      return build_graph(k, edges);
    case Family::triangles:
      for (int i = 0; i < k; ++i) {
        int a = 3 * i + 1;
        edges.emplace_back(a, a + 1);
        edges.emplace_back(a, a + 2);
        edges.emplace_back(a + 1, a + 2);
      }
      return build_graph(3 * k, edges);
    case Family::kite:
      for (int v = 2; v < k; ++v) edges.emplace_back(1, v);
      edges.emplace_back(k - 1, k);
      return build_graph(k, edges);
  }
  throw ValidationError("family_graph: unknown family");
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  long long declared = -1;
  std::vector<std::pair<int, int>> edges;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> declared) || n < 1 || declared < 0)
        throw ValidationError("edge list: malformed header at line " + std::to_string(lineno));
    } else {
      int u = 0, v = 0;
      if (!(ls >> u >> v))
        throw ValidationError("edge list: malformed edge at line " + std::to_string(lineno));
      edges.emplace_back(u, v);
    }
    std::string extra;
    if (ls >> extra)
      throw ValidationError("edge list: trailing tokens at line " + std::to_string(lineno));
  }
  if (n < 0) throw ValidationError("edge list: missing header");
  if (static_cast<long long>(edges.size()) != declared) {
    throw ValidationError("edge list: declared " + std::to_string(declared) + " edges, found " +
                          std::to_string(edges.size()));
  }
  return build_graph(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace crossings
