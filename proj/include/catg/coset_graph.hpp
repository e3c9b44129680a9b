#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "catg/graph.hpp"
#include "catg/perm_group.hpp"

namespace catg {

// Canonical representative of the right coset Hx: the element of Hx whose
// image sequence on H's base is lexicographically minimal, found by walking
// H's transversals. Deterministic across runs.
Perm canonical_right_coset_rep(const PermGroup& h, const Perm& x);

// Membership oracle for the double coset HgH. Two strategies behind one
// interface: a hash set of the enumerated double coset while order(H)^2 stays
// below the cap, otherwise factor-and-sift (canonicalize the right coset of
// the candidate and compare against the canonical representatives of the
// right cosets inside HgH).
class DoubleCosetMembership {
public:
  static constexpr std::uint64_t kStrategyCrossover = 1000000;  // order(H)^2

  DoubleCosetMembership(const PermGroup& h, const Perm& g);

  bool contains(const Perm& v) const;
  bool uses_enumeration() const { return enumerated_; }

  // Canonical representatives of the right cosets of H inside HgH; their
  // count is the valency |H : H ∩ H^g|.
  const std::vector<Perm>& coset_reps() const { return reps_; }

private:
  const PermGroup& h_;
  bool enumerated_;
  std::unordered_set<Perm> element_set_;  // enumeration strategy
  std::vector<Perm> reps_;
  std::unordered_set<Perm> rep_set_;      // sift strategy
};

// Symbolic coset graph Cos(X, H, g): vertices are right cosets of H in X,
// Hx ~ Hy iff yx^-1 in HgH. Validation checks that H's generators and g lie
// in X and that adjacency is symmetric (g^-1 in HgH); asymmetric specs are
// rejected rather than silently symmetrized.
struct CosetGraphSpec {
  PermGroup x;
  PermGroup h;
  Perm g;

  static CosetGraphSpec validated(PermGroup x, PermGroup h, Perm g);
};

// |H : H ∩ H^g| by exact division. Requires order(H) <= cap.
std::uint64_t valency_of_spec(const CosetGraphSpec& spec,
                              std::uint64_t cap = 10000);

// True iff <H, g> has the order of X.
bool is_connected_spec(const CosetGraphSpec& spec);

// All distinct products h1 g h2. Requires order(H)^2 <= cap.
std::vector<Perm> double_coset(const PermGroup& h, const Perm& g,
                               std::uint64_t cap = 1000000);

// R ∩ HgH, deduplicated. The caller is responsible for R being regular on
// the cosets. Requires order(H)^2 <= cap.
std::vector<Perm> connection_set(const CosetGraphSpec& spec, const PermGroup& r,
                                 std::uint64_t cap = 1000000);

// Vertices in breadth-first coset discovery order from H*1 over X's
// generators; vertex labels are canonical representatives in cycle notation.
// Throws IndexExceedsCap if |X:H| > vertex_cap, InvalidSpec if g lies in H
// (the adjacency relation would produce loops).
Graph materialize_coset_graph(const CosetGraphSpec& spec,
                              std::uint64_t vertex_cap = 2000,
                              bool with_labels = true);

// The permutation action of X's generators on the coset vertices of
// materialize_coset_graph, as a group on 1-based vertex ids.
PermGroup coset_action(const CosetGraphSpec& spec,
                       std::uint64_t vertex_cap = 2000);

// Symbolic Cayley graph Cay(G, S): vertices are the elements of G in
// breadth-first closure order from the identity, x ~ y iff y x^-1 in S.
struct CayleyGraphSpec {
  PermGroup g;
  std::vector<Perm> s;

  // Checks: identity not in S, S inverse-closed, elements distinct, all in G.
  static CayleyGraphSpec validated(PermGroup g, std::vector<Perm> s);
};

Graph materialize_cayley_graph(const CayleyGraphSpec& spec,
                               std::uint64_t vertex_cap = 10000,
                               bool with_labels = true);

// The fixed vertex enumeration shared by materialize_cayley_graph and the
// right regular representation.
std::vector<Perm> cayley_vertex_elements(const PermGroup& g,
                                         std::uint64_t vertex_cap);

}  // namespace catg
