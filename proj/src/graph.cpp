#include "catg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "catg/errors.hpp"

namespace catg {

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) throw Error("negative vertex count");
  Graph g;
  g.vertex_count = vertex_count;
  g.adj.resize(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw Error("edge endpoint out of range");
    if (u == v) throw Error("loop edge rejected: graph must be simple");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& list : g.adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& list = adj[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adj) twice += list.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_regular_of_degree(int k) const {
  for (const auto& list : adj)
    if (static_cast<int>(list.size()) != k) return false;
  return true;
}

bool Graph::is_connected() const {
  if (vertex_count == 0) return true;
  std::vector<bool> seen(vertex_count, false);
  std::queue<int> work;
  work.push(0);
  seen[0] = true;
  int reached = 1;
  while (!work.empty()) {
    int u = work.front();
    work.pop();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        work.push(v);
      }
  }
  return reached == vertex_count;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq;
  seq.reserve(vertex_count);
  for (const auto& list : adj) seq.push_back(static_cast<int>(list.size()));
  std::sort(seq.begin(), seq.end());
  return seq;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(vertex_count, false);
  for (int start = 0; start < vertex_count; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::queue<int> work;
    work.push(start);
    seen[start] = true;
    while (!work.empty()) {
      int u = work.front();
      work.pop();
      comp.push_back(u);
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          work.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  if (!(in >> word) || word != "vertices")
    throw ParseError("edge list must start with 'vertices <n>'", 0);
  int n = 0;
  if (!(in >> n) || n < 0) throw ParseError("bad vertex count", 0);
  std::vector<std::pair<int, int>> edges;
  long long u, v;
  while (in >> u >> v) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  if (!in.eof() && in.fail()) {
    in.clear();
    std::string tail;
    in >> tail;
    if (!tail.empty()) throw ParseError("bad edge line near '" + tail + "'", 0);
  }
  return Graph::from_edges(n, edges);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open edge list: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string write_edge_list(const Graph& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string write_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (int v = 0; v < g.vertex_count; ++v) {
    out += "  " + std::to_string(v);
    if (!g.labels.empty()) out += " [label=\"" + g.labels[v] + "\"]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace catg
