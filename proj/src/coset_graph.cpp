#include "catg/coset_graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "catg/bigcount.hpp"

namespace catg {

Perm canonical_right_coset_rep(const PermGroup& h, const Perm& x) {
  if (x.degree() != h.degree()) throw DegreeMismatch(h.degree(), x.degree());
  Perm y = x;
  const auto& chain = h.bsgs();
  for (std::size_t l = 0; l < chain.levels().size(); ++l) {
    const auto& level = chain.levels()[l];
    int best_point = level.base;
    std::uint32_t best_img = y.raw(level.base);
    for (int delta : level.orbit) {
      std::uint32_t img = y.raw(delta);
      if (img < best_img) {
        best_img = img;
        best_point = delta;
      }
    }
    if (best_point != level.base) y = compose(chain.rep(static_cast<int>(l), best_point), y);
  }
  return y;
}

DoubleCosetMembership::DoubleCosetMembership(const PermGroup& h, const Perm& g)
    : h_(h) {
  if (g.degree() != h.degree()) throw DegreeMismatch(h.degree(), g.degree());

  // canonical representatives of the right cosets of H inside HgH: the orbit
  // of Hg under right multiplication by H's generators
  Perm start = canonical_right_coset_rep(h, g);
  reps_.push_back(start);
  rep_set_.insert(start);
  std::size_t next = 0;
  while (next < reps_.size()) {
    Perm current = reps_[next++];
    for (const Perm& s : h.generators()) {
      Perm cand = canonical_right_coset_rep(h, compose(current, s));
      if (rep_set_.insert(cand).second) reps_.push_back(cand);
    }
  }

  BigCount square = h.order() * h.order();
  enumerated_ = square <= BigCount(kStrategyCrossover);
  if (enumerated_) {
    std::vector<Perm> elems = h.elements(to_u64(h.order()));
    for (const Perm& w : reps_)
      for (const Perm& e : elems) element_set_.insert(compose(e, w));
  }
}

bool DoubleCosetMembership::contains(const Perm& v) const {
  if (enumerated_) return element_set_.count(v) > 0;
  return rep_set_.count(canonical_right_coset_rep(h_, v)) > 0;
}

CosetGraphSpec CosetGraphSpec::validated(PermGroup x, PermGroup h, Perm g) {
  if (h.degree() != x.degree()) throw DegreeMismatch(x.degree(), h.degree());
  if (g.degree() != x.degree()) throw DegreeMismatch(x.degree(), g.degree());
  for (const Perm& s : h.generators())
    if (!x.contains(s)) throw InvalidSpec("H is not a subgroup of X: generator " +
                                          to_cycle_string(s) + " lies outside X");
  if (!x.contains(g)) throw InvalidSpec("g lies outside X");
  DoubleCosetMembership dc(h, g);
  if (!dc.contains(g.inverse()))
    throw InvalidSpec("adjacency is not symmetric: g^-1 does not lie in HgH");
  return CosetGraphSpec{std::move(x), std::move(h), std::move(g)};
}

std::uint64_t valency_of_spec(const CosetGraphSpec& spec, std::uint64_t cap) {
  PermGroup conj = conjugate_subgroup(spec.h, spec.g);
  PermGroup meet = intersection_small(spec.h, conj, cap);
  BigCount val = divide_exact(spec.h.order(), meet.order());
  return to_u64(val);
}

bool is_connected_spec(const CosetGraphSpec& spec) {
  std::vector<Perm> gens = spec.h.generators();
  gens.push_back(spec.g);
  return PermGroup::from_generators(std::move(gens)).order() == spec.x.order();
}

std::vector<Perm> double_coset(const PermGroup& h, const Perm& g,
                               std::uint64_t cap) {
  BigCount square = h.order() * h.order();
  if (square > BigCount(cap)) throw OrderExceedsCap(to_string(square), cap);

  DoubleCosetMembership dc(h, g);
  std::vector<Perm> elems = h.elements(to_u64(h.order()));
  std::vector<Perm> out;
  out.reserve(elems.size() * dc.coset_reps().size());
  for (const Perm& w : dc.coset_reps())
    for (const Perm& e : elems) out.push_back(compose(e, w));

  // |HgH| = |H|^2 / |H ∩ H^{g^-1}|
  PermGroup meet =
      intersection_small(h, conjugate_subgroup(h, g.inverse()), cap);
  BigCount expected = divide_exact(square, meet.order());
  if (BigCount(out.size()) != expected)
    throw Error("double coset size mismatch: got " +
                std::to_string(out.size()) + ", expected " +
                to_string(expected));
  return out;
}

std::vector<Perm> connection_set(const CosetGraphSpec& spec, const PermGroup& r,
                                 std::uint64_t cap) {
  std::vector<Perm> out;
  for (const Perm& p : double_coset(spec.h, spec.g, cap))
    if (r.contains(p)) out.push_back(p);
  return out;
}

namespace {

struct CosetEnumeration {
  std::vector<Perm> reps;                // discovery order
  std::unordered_map<Perm, int> index;   // canonical rep -> vertex id
};

CosetEnumeration enumerate_cosets(const PermGroup& x, const PermGroup& h,
                                  std::uint64_t vertex_cap) {
  BigCount index = divide_exact(x.order(), h.order());
  if (index > BigCount(vertex_cap))
    throw IndexExceedsCap(to_string(index), vertex_cap);

  CosetEnumeration out;
  Perm start = canonical_right_coset_rep(h, Perm(x.degree()));
  out.reps.push_back(start);
  out.index.emplace(start, 0);
  std::size_t next = 0;
  while (next < out.reps.size()) {
    Perm current = out.reps[next++];
    for (const Perm& s : x.generators()) {
      Perm cand = canonical_right_coset_rep(h, compose(current, s));
      if (out.index.emplace(cand, static_cast<int>(out.reps.size())).second)
        out.reps.push_back(cand);
    }
  }
  assert(BigCount(out.reps.size()) == index);
  return out;
}

}  // namespace

Graph materialize_coset_graph(const CosetGraphSpec& spec,
                              std::uint64_t vertex_cap, bool with_labels) {
  if (spec.h.contains(spec.g))
    throw InvalidSpec(
        "g lies in H: every coset would be adjacent only to itself");

  CosetEnumeration cosets = enumerate_cosets(spec.x, spec.h, vertex_cap);
  DoubleCosetMembership dc(spec.h, spec.g);

  int n = static_cast<int>(cosets.reps.size());
  std::vector<std::vector<int>> directed(n);
  for (int i = 0; i < n; ++i) {
    for (const Perm& w : dc.coset_reps()) {
      Perm target = canonical_right_coset_rep(spec.h, compose(w, cosets.reps[i]));
      auto it = cosets.index.find(target);
      assert(it != cosets.index.end());
      directed[i].push_back(it->second);
    }
    std::sort(directed[i].begin(), directed[i].end());
  }

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j : directed[i]) {
      if (!std::binary_search(directed[j].begin(), directed[j].end(), i))
        throw Error("internal adjacency asymmetry in coset graph");
      if (i < j) edges.emplace_back(i, j);
    }

  Graph graph = Graph::from_edges(n, edges);
  if (with_labels) {
    graph.labels.reserve(n);
    for (const Perm& r : cosets.reps) graph.labels.push_back(to_cycle_string(r));
  }
  return graph;
}

PermGroup coset_action(const CosetGraphSpec& spec, std::uint64_t vertex_cap) {
  CosetEnumeration cosets = enumerate_cosets(spec.x, spec.h, vertex_cap);
  int n = static_cast<int>(cosets.reps.size());
  std::vector<Perm> action_gens;
  for (const Perm& s : spec.x.generators()) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) {
      Perm target = canonical_right_coset_rep(spec.h, compose(cosets.reps[i], s));
      images[i] = cosets.index.at(target) + 1;
    }
    action_gens.push_back(Perm::from_images(n, images));
  }
  if (action_gens.empty()) return PermGroup::trivial(n);
  return PermGroup::from_generators(std::move(action_gens));
}

CayleyGraphSpec CayleyGraphSpec::validated(PermGroup g, std::vector<Perm> s) {
  std::unordered_set<Perm> set;
  for (const Perm& e : s) {
    if (e.degree() != g.degree()) throw DegreeMismatch(g.degree(), e.degree());
    if (e.is_identity())
      throw InvalidConnectionSet("identity element in connection set");
    if (!set.insert(e).second)
      throw InvalidConnectionSet("repeated element in connection set: " +
                                 to_cycle_string(e));
    if (!g.contains(e))
      throw InvalidConnectionSet("connection element outside G: " +
                                 to_cycle_string(e));
  }
  for (const Perm& e : s)
    if (set.count(e.inverse()) == 0)
      throw InvalidConnectionSet("connection set is not inverse-closed at " +
                                 to_cycle_string(e));
  return CayleyGraphSpec{std::move(g), std::move(s)};
}

std::vector<Perm> cayley_vertex_elements(const PermGroup& g,
                                         std::uint64_t vertex_cap) {
  return g.elements(vertex_cap);
}

Graph materialize_cayley_graph(const CayleyGraphSpec& spec,
                               std::uint64_t vertex_cap, bool with_labels) {
  std::vector<Perm> elems = cayley_vertex_elements(spec.g, vertex_cap);
  std::unordered_map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], static_cast<int>(i));

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& s : spec.s) {
      int j = index.at(compose(s, elems[i]));  // y = s x  <=>  y x^-1 = s
      if (static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  Graph graph = Graph::from_edges(static_cast<int>(elems.size()), edges);
  if (!graph.is_regular_of_degree(static_cast<int>(spec.s.size())))
    throw Error("internal: Cayley graph is not |S|-regular");
  if (with_labels) {
    graph.labels.reserve(elems.size());
    for (const Perm& e : elems) graph.labels.push_back(to_cycle_string(e));
  }
  return graph;
}

}  // namespace catg
