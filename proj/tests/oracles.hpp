#pragma once

// Independent test oracles. Nothing here goes through the BSGS machinery, so
// these stay valid even if the engine under test is wrong.

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "catg/perm.hpp"

namespace oracles {

// Full element enumeration by multiplicative closure, no stabilizer chains.
inline std::vector<catg::Perm> brute_force_closure(
    const std::vector<catg::Perm>& gens) {
  using catg::Perm;
  if (gens.empty()) return {};
  Perm id(gens.front().degree());
  std::vector<Perm> out{id};
  std::unordered_set<Perm> seen{id};
  std::size_t next = 0;
  while (next < out.size()) {
    Perm cur = out[next++];
    for (const Perm& g : gens) {
      Perm p = catg::compose(cur, g);
      if (seen.insert(p).second) out.push_back(p);
    }
  }
  return out;
}

inline catg::Perm random_perm(std::mt19937& rng, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return catg::Perm::from_images(degree, img);
}

// Refinement-free automorphism count: raw backtrack over all vertex
// bijections with adjacency-consistency pruning. Feasible around 10 vertices.
inline std::uint64_t count_automorphisms_exhaustive(const catg::Graph& g) {
  int n = g.vertex_count;
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(v) != g.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.adjacent(u, v) != g.adjacent(img[u], w)) ok = false;
      if (!ok) continue;
      img[v] = w;
      used[w] = true;
      self(self, v + 1);
      used[w] = false;
      img[v] = -1;
    }
  };
  rec(rec, 0);
  return count;
}

// Standard test graphs.
inline catg::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return catg::Graph::from_edges(n, edges);
}

inline catg::Graph complete_bipartite(int m, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return catg::Graph::from_edges(m + n, edges);
}

inline catg::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return catg::Graph::from_edges(n, edges);
}

inline catg::Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return catg::Graph::from_edges(10, edges);
}

inline catg::Graph relabeled(const catg::Graph& g, const catg::Perm& p) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(p.image(u + 1) - 1, p.image(v + 1) - 1);
  return catg::Graph::from_edges(g.vertex_count, edges);
}

}  // namespace oracles
