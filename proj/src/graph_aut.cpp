#include "catg/graph_aut.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "catg/bigcount.hpp"

namespace catg {

namespace {

using Cells = std::vector<std::vector<int>>;  // ordered partition, 0-based vertices

// Equitable refinement (1-dimensional Weisfeiler-Leman). Cells split by
// neighbor counts against every pending splitter; fragments are ordered by
// ascending count, which keeps the procedure isomorphism-invariant.
void refine(const Graph& g, Cells& cells) {
  std::deque<std::vector<int>> work(cells.begin(), cells.end());
  std::vector<int> count(g.vertex_count, 0);
  while (!work.empty()) {
    std::vector<int> splitter = std::move(work.front());
    work.pop_front();
    for (int v : splitter)
      for (int u : g.adj[v]) ++count[u];

    Cells next;
    next.reserve(cells.size());
    bool changed = false;
    for (auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      std::map<int, std::vector<int>> buckets;
      for (int v : cell) buckets[count[v]].push_back(v);
      if (buckets.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      changed = true;
      for (auto& [cnt, verts] : buckets) {
        work.push_back(verts);
        next.push_back(std::move(verts));
      }
    }
    if (changed) cells = std::move(next);

    for (int v : splitter)
      for (int u : g.adj[v]) count[u] = 0;
  }
}

int target_cell(const Cells& cells) {
  int best = -1;
  std::size_t best_size = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() < 2) continue;
    if (best < 0 || cells[i].size() < best_size) {
      best = static_cast<int>(i);
      best_size = cells[i].size();
    }
  }
  return best;  // -1 when discrete
}

Cells individualize_and_refine(const Graph& g, const Cells& cells, int cell_idx,
                               int v) {
  Cells next;
  next.reserve(cells.size() + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (static_cast<int>(i) != cell_idx) {
      next.push_back(cells[i]);
      continue;
    }
    std::vector<int> rest;
    rest.reserve(cells[i].size() - 1);
    for (int u : cells[i])
      if (u != v) rest.push_back(u);
    next.push_back({v});
    next.push_back(std::move(rest));
  }
  refine(g, next);
  return next;
}

std::vector<std::size_t> shape_of(const Cells& cells) {
  std::vector<std::size_t> s;
  s.reserve(cells.size());
  for (const auto& c : cells) s.push_back(c.size());
  return s;
}

bool preserves_edges(const Graph& g, const Perm& p) {
  for (int u = 0; u < g.vertex_count; ++u) {
    int pu = p.image(u + 1) - 1;
    for (int v : g.adj[u])
      if (!g.adjacent(pu, p.image(v + 1) - 1)) return false;
  }
  return true;
}

// Individualization backtracking against the leftmost leaf. Candidates at
// nodes on the leftmost path are pruned to orbit representatives under the
// group found so far; off-path subtrees are abandoned as soon as they yield
// one automorphism.
class AutSearch {
public:
  explicit AutSearch(const Graph& g) : g_(g), n_(g.vertex_count) {}

  std::vector<Perm> run() {
    if (n_ == 0) return {};
    Cells root(1);
    root[0].resize(n_);
    std::iota(root[0].begin(), root[0].end(), 0);
    refine(g_, root);

    // leftmost descent: always individualize the first vertex of the target cell
    spine_partitions_.push_back(root);
    Cells current = root;
    for (;;) {
      int c = target_cell(current);
      if (c < 0) break;
      int v = current[c][0];
      spine_cell_.push_back(c);
      spine_vertex_.push_back(v);
      current = individualize_and_refine(g_, current, c, v);
      spine_partitions_.push_back(current);
    }
    spine_shapes_.reserve(spine_partitions_.size());
    for (const auto& p : spine_partitions_) spine_shapes_.push_back(shape_of(p));
    first_leaf_.reserve(n_);
    for (const auto& cell : spine_partitions_.back()) {
      assert(cell.size() == 1);
      first_leaf_.push_back(cell[0]);
    }

    search(0, spine_partitions_[0], true);
    return generators_;
  }

private:
  enum Result { kExhausted, kUnwindToSpine };

  Result search(std::size_t depth, const Cells& cells, bool on_spine) {
    int c = target_cell(cells);
    if (c < 0) {
      if (on_spine) return kExhausted;  // the leftmost leaf itself
      return handle_leaf(cells);
    }

    std::vector<int> processed;
    for (int v : cells[c]) {
      bool child_on_spine = on_spine && v == spine_vertex_[depth];
      if (on_spine && !child_on_spine && pruned_by_orbit(depth, v, processed))
        continue;
      if (on_spine) processed.push_back(v);

      Cells child = child_on_spine ? spine_partitions_[depth + 1]
                                   : individualize_and_refine(g_, cells, c, v);
      if (!child_on_spine && shape_of(child) != spine_shapes_[depth + 1])
        continue;

      Result r = search(depth + 1, child, child_on_spine);
      if (r == kUnwindToSpine && !on_spine) return kUnwindToSpine;
    }
    return kExhausted;
  }

  Result handle_leaf(const Cells& cells) {
    std::vector<int> images(n_);
    for (std::size_t i = 0; i < cells.size(); ++i)
      images[first_leaf_[i]] = cells[i][0] + 1;
    Perm sigma = Perm::from_images(n_, images);
    if (sigma.is_identity() || !preserves_edges(g_, sigma)) return kExhausted;
    generators_.push_back(sigma);
    rebuild_chain();
    return kUnwindToSpine;
  }

  void rebuild_chain() {
    std::vector<int> base;
    base.reserve(spine_vertex_.size());
    for (int v : spine_vertex_) base.push_back(v + 1);
    chain_ = PermGroup::from_generators_with_base(generators_, base);
  }

  // True if v lies in the orbit of an already-processed candidate under the
  // known automorphisms fixing the first `depth` spine vertices.
  bool pruned_by_orbit(std::size_t depth, int v, const std::vector<int>& processed) {
    if (processed.empty() || !chain_.has_value()) return false;
    std::vector<const Perm*> gens;
    const auto& levels = chain_->bsgs().levels();
    for (std::size_t l = depth; l < levels.size(); ++l)
      for (const Perm& p : levels[l].gens) gens.push_back(&p);
    if (gens.empty()) return false;

    std::vector<int> orbit{v};
    std::vector<bool> seen(n_, false);
    seen[v] = true;
    std::size_t next = 0;
    while (next < orbit.size()) {
      int x = orbit[next++];
      for (const Perm* p : gens) {
        int y = static_cast<int>(p->raw(x));
        if (!seen[y]) {
          if (std::find(processed.begin(), processed.end(), y) != processed.end())
            return true;
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    for (int w : processed)
      if (seen[w]) return true;
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<Cells> spine_partitions_;
  std::vector<std::vector<std::size_t>> spine_shapes_;
  std::vector<int> spine_cell_;
  std::vector<int> spine_vertex_;
  std::vector<int> first_leaf_;
  std::vector<Perm> generators_;
  std::optional<PermGroup> chain_;
};

}  // namespace

PermGroup automorphism_group(const Graph& g, std::uint64_t vertex_cap) {
  if (static_cast<std::uint64_t>(g.vertex_count) > vertex_cap)
    throw VertexCapExceeded(g.vertex_count, vertex_cap);
  std::vector<Perm> gens = AutSearch(g).run();
  for (const Perm& p : gens)
    if (!preserves_edges(g, p))
      throw Error("internal: automorphism search returned a non-automorphism");
  if (gens.empty()) return PermGroup::trivial(std::max(g.vertex_count, 0));
  return PermGroup::from_generators(std::move(gens));
}

std::uint64_t count_s_arcs(const Graph& g, int s) {
  if (s < 0) throw Error("negative s");
  if (s == 0) return static_cast<std::uint64_t>(g.vertex_count);

  // c[directed edge u->v] = number of s'-arcs ending with the step u->v
  std::vector<std::pair<int, int>> darts;
  std::unordered_map<std::uint64_t, std::size_t> dart_index;
  auto key = [&](int u, int v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  };
  for (int u = 0; u < g.vertex_count; ++u)
    for (int v : g.adj[u]) {
      dart_index.emplace(key(u, v), darts.size());
      darts.emplace_back(u, v);
    }

  std::vector<std::uint64_t> c(darts.size(), 1);
  for (int step = 2; step <= s; ++step) {
    std::vector<std::uint64_t> next(darts.size(), 0);
    for (std::size_t d = 0; d < darts.size(); ++d) {
      auto [u, v] = darts[d];
      for (int w : g.adj[v]) {
        if (w == u) continue;
        std::size_t e = dart_index.at(key(v, w));
        std::uint64_t add = c[d];
        if (next[e] > UINT64_MAX - add) throw Error("s-arc count overflow");
        next[e] += add;
      }
    }
    c = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t x : c) {
    if (total > UINT64_MAX - x) throw Error("s-arc count overflow");
    total += x;
  }
  return total;
}

namespace {

void check_acts_as_automorphisms(const Graph& g, const PermGroup& a) {
  if (a.degree() != g.vertex_count)
    throw NotAutomorphism("group degree " + std::to_string(a.degree()) +
                          " does not match vertex count " +
                          std::to_string(g.vertex_count));
  for (const Perm& p : a.generators())
    if (!preserves_edges(g, p))
      throw NotAutomorphism("generator " + to_cycle_string(p) +
                            " does not preserve edges");
}

void enumerate_arcs(const Graph& g, int s, std::vector<int>& walk,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(walk.size()) == s + 1) {
    out.push_back(walk);
    return;
  }
  int v = walk.back();
  int forbidden = walk.size() >= 2 ? walk[walk.size() - 2] : -1;
  for (int w : g.adj[v]) {
    if (w == forbidden) continue;
    walk.push_back(w);
    enumerate_arcs(g, s, walk, out);
    walk.pop_back();
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::uint64_t s_arc_orbit_count(const Graph& g, const PermGroup& a, int s) {
  if (s < 0) throw Error("negative s");
  check_acts_as_automorphisms(g, a);

  constexpr std::uint64_t kArcCap = 5000000;
  std::uint64_t total = count_s_arcs(g, s);
  if (total == 0) return 0;
  if (total > kArcCap)
    throw Error("too many s-arcs to enumerate: " + std::to_string(total));

  std::vector<std::vector<int>> arcs;
  arcs.reserve(total);
  for (int v = 0; v < g.vertex_count; ++v) {
    std::vector<int> walk{v};
    enumerate_arcs(g, s, walk, arcs);
  }
  assert(arcs.size() == total);

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    index.emplace(arcs[i], static_cast<int>(i));

  UnionFind uf(arcs.size());
  std::vector<int> image(s + 1);
  for (const Perm& p : a.generators()) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (int k = 0; k <= s; ++k) image[k] = p.image(arcs[i][k] + 1) - 1;
      uf.unite(static_cast<int>(i), index.at(image));
    }
  }
  std::uint64_t orbits = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) ++orbits;
  return orbits;
}

int transitivity_degree(const Graph& g, const PermGroup& a) {
  check_acts_as_automorphisms(g, a);
  if (g.vertex_count == 0) throw Error("empty graph");
  if (!a.is_transitive())
    throw NotArcTransitive("group is not vertex-transitive");
  int valency = g.degree(0);
  if (!g.is_regular_of_degree(valency))
    throw NotArcTransitive("graph is not regular");
  if (valency < 3)
    throw Error("transitivity degree requires valency >= 3; cycles are "
                "s-arc-transitive for every s");
  if (s_arc_orbit_count(g, a, 1) != 1)
    throw NotArcTransitive("group is not transitive on arcs");

  int s = 1;
  for (;;) {
    std::uint64_t arcs = count_s_arcs(g, s + 1);
    // a group is transitive on a set no larger than itself
    if (a.order() < BigCount(arcs)) return s;
    if (s_arc_orbit_count(g, a, s + 1) != 1) return s;
    ++s;
  }
}

PermGroup right_regular_representation(const PermGroup& g, std::uint64_t cap) {
  std::vector<Perm> elems = cayley_vertex_elements(g, cap);
  std::unordered_map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], static_cast<int>(i));

  int n = static_cast<int>(elems.size());
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = index.at(compose(elems[i], s)) + 1;
    gens.push_back(Perm::from_images(n, images));
  }
  PermGroup result = gens.empty() ? PermGroup::trivial(n)
                                  : PermGroup::from_generators(std::move(gens));
  if (!result.is_regular())
    throw Error("internal: right regular representation is not regular");
  return result;
}

bool is_normal_cayley(const CayleyGraphSpec& spec, std::uint64_t cap) {
  Graph graph = materialize_cayley_graph(spec, cap, false);
  PermGroup aut = automorphism_group(graph, graph.vertex_count);
  PermGroup reg = right_regular_representation(spec.g, cap);
  return is_normal_in(reg, aut);
}

PermGroup aut_g_s(const CayleyGraphSpec& spec, std::uint64_t cap,
                  std::uint64_t stabilizer_cap) {
  std::vector<Perm> elems = cayley_vertex_elements(spec.g, cap);
  std::unordered_map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], static_cast<int>(i));
  int n = static_cast<int>(elems.size());

  Graph graph = materialize_cayley_graph(spec, cap, false);
  PermGroup aut = automorphism_group(graph, graph.vertex_count);
  PermGroup stab = aut.point_stabilizer(1);  // identity is vertex 0

  // σ is multiplicative when σ(u s) = σ(u) σ(s) for every vertex label u and
  // every s in S; for a connected graph S generates G, so this pins σ as a
  // group automorphism preserving S.
  std::vector<int> s_vertex;
  for (const Perm& s : spec.s) s_vertex.push_back(index.at(s));

  std::vector<Perm> stab_elems = stab.elements(stabilizer_cap);
  std::vector<Perm> mult;
  PermGroup reg = right_regular_representation(spec.g, cap);
  std::size_t normalizing = 0;
  for (const Perm& sigma : stab_elems) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      int sigma_u = sigma.image(u + 1) - 1;
      for (int sv : s_vertex) {
        // vertex of u*s
        int us = index.at(compose(elems[u], elems[sv]));
        int sigma_us = sigma.image(us + 1) - 1;
        // σ(u s) must equal σ(u) σ(s)
        int sigma_sv = sigma.image(sv + 1) - 1;
        if (index.at(compose(elems[sigma_u], elems[sigma_sv])) != sigma_us) {
          ok = false;
          break;
        }
      }
    }
    if (ok && !sigma.is_identity()) mult.push_back(sigma);

    // normalizer of the regular copy inside the stabilizer
    bool normalizes = true;
    for (const Perm& r : reg.generators())
      if (!reg.contains(conjugate(r, sigma))) {
        normalizes = false;
        break;
      }
    if (normalizes) ++normalizing;
  }

  PermGroup result = mult.empty() ? PermGroup::trivial(n)
                                  : PermGroup::from_generators(std::move(mult));

  // normalizer identity: N_A(G) = G : Aut(G,S), so |N_A(G)_1| = |Aut(G,S)|
  if (BigCount(normalizing) != result.order())
    throw Error("normalizer identity violated: stabilizer normalizer has " +
                std::to_string(normalizing) + " elements, Aut(G,S) has " +
                to_string(result.order()));
  return result;
}

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::unordered_map<int, int> remap;
  for (std::size_t i = 0; i < verts.size(); ++i)
    remap.emplace(verts[i], static_cast<int>(i));
  std::vector<std::pair<int, int>> edges;
  for (int v : verts)
    for (int u : g.adj[v])
      if (v < u && remap.count(u)) edges.emplace_back(remap[v], remap[u]);
  return Graph::from_edges(static_cast<int>(verts.size()), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  for (auto [u, v] : b.edges())
    edges.emplace_back(u + a.vertex_count, v + a.vertex_count);
  return Graph::from_edges(a.vertex_count + b.vertex_count, edges);
}

// Connected case: a and b are isomorphic iff some automorphism of their
// disjoint union moves a vertex across the sides.
bool connected_isomorphic(const Graph& a, const Graph& b,
                          std::uint64_t vertex_cap) {
  if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count())
    return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  if (a.vertex_count == 0) return true;
  Graph both = disjoint_union(a, b);
  PermGroup aut = automorphism_group(both, 2 * vertex_cap);
  for (int v : aut.orbit(1))
    if (v > a.vertex_count) return true;
  return false;
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b,
                       std::uint64_t vertex_cap) {
  if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count())
    return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;

  auto comps_a = a.components();
  auto comps_b = b.components();
  if (comps_a.size() != comps_b.size()) return false;
  if (comps_a.size() == 1) return connected_isomorphic(a, b, vertex_cap);

  std::vector<Graph> parts_a, parts_b;
  for (const auto& c : comps_a) parts_a.push_back(induced_subgraph(a, c));
  for (const auto& c : comps_b) parts_b.push_back(induced_subgraph(b, c));

  std::vector<bool> used(parts_b.size(), false);
  for (const Graph& pa : parts_a) {
    bool matched = false;
    for (std::size_t j = 0; j < parts_b.size(); ++j) {
      if (used[j]) continue;
      if (connected_isomorphic(pa, parts_b[j], vertex_cap)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace catg
