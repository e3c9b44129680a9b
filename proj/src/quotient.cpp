#include "catg/quotient.hpp"

#include <algorithm>
#include <set>

#include "catg/bigcount.hpp"
#include "catg/errors.hpp"

namespace catg {

namespace {

bool preserves_edges_of(const Graph& g, const Perm& p) {
  for (int u = 0; u < g.vertex_count; ++u) {
    int pu = p.image(u + 1) - 1;
    for (int v : g.adj[u])
      if (!g.adjacent(pu, p.image(v + 1) - 1)) return false;
  }
  return true;
}

}  // namespace

QuotientResult quotient_graph(const Graph& g, const PermGroup& x,
                              const PermGroup& n) {
  if (x.degree() != g.vertex_count || n.degree() != g.vertex_count)
    throw NotAutomorphism("group degree does not match vertex count");
  for (const Perm& p : x.generators())
    if (!preserves_edges_of(g, p))
      throw NotAutomorphism("X generator " + to_cycle_string(p) +
                            " does not preserve edges");
  if (!is_normal_in(n, x)) throw NotNormal("N is not normal in X");

  QuotientResult out;
  out.orbit_map.assign(g.vertex_count, -1);
  int orbit_id = 0;
  std::vector<std::size_t> orbit_sizes;
  for (int v = 1; v <= g.vertex_count; ++v) {
    if (out.orbit_map[v - 1] >= 0) continue;
    std::vector<int> orb = n.orbit(v);
    for (int w : orb) out.orbit_map[w - 1] = orbit_id;
    orbit_sizes.push_back(orb.size());
    ++orbit_id;
  }
  out.orbit_count = orbit_id;

  out.semiregular = true;
  for (std::size_t size : orbit_sizes)
    if (BigCount(size) != n.order()) {
      out.semiregular = false;
      break;
    }

  std::set<std::pair<int, int>> edges;
  for (int u = 0; u < g.vertex_count; ++u)
    for (int v : g.adj[u]) {
      int a = out.orbit_map[u];
      int b = out.orbit_map[v];
      if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
    }
  out.quotient = Graph::from_edges(
      orbit_id, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));

  out.valency_preserved = g.is_regular_of_degree(5) && out.orbit_count > 2 &&
                          out.quotient.is_regular_of_degree(5);
  return out;
}

}  // namespace catg
