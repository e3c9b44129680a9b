#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace catg {

// Simple undirected graph on dense 0-based vertex ids with sorted adjacency
// lists. Vertex labels are optional (coset representative or group element
// in cycle notation).
struct Graph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::string> labels;  // empty or size vertex_count

  static Graph from_edges(int vertex_count,
                          const std::vector<std::pair<int, int>>& edges);

  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  bool is_regular_of_degree(int k) const;
  bool is_connected() const;  // by BFS; the empty graph counts as connected
  std::vector<int> degree_sequence() const;  // sorted ascending

  // Connected components as vertex lists, each sorted, ordered by least vertex.
  std::vector<std::vector<int>> components() const;
};

// Edge-list format: header "vertices <n>", then one "<u> <v>" line per edge,
// 0-based, u < v.
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);
std::string write_edge_list(const Graph& g);

std::string write_dot(const Graph& g);

}  // namespace catg
