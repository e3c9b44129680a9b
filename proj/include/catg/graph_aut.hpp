#pragma once

#include <cstdint>

#include "catg/coset_graph.hpp"
#include "catg/graph.hpp"
#include "catg/perm_group.hpp"

namespace catg {

// Full automorphism group of a graph, acting on 1-based vertex ids
// (vertex v corresponds to point v+1). Partition refinement plus
// individualization backtracking; every returned generator is re-checked to
// preserve edges before the group is returned.
PermGroup automorphism_group(const Graph& g, std::uint64_t vertex_cap = 2000);

// Number of s-arcs: walks (v0..vs) with consecutive vertices adjacent and no
// immediate backtracking. Counted by dynamic programming over directed edges.
std::uint64_t count_s_arcs(const Graph& g, int s);

// Number of orbits of the group A (acting on vertices as automorphisms) on
// the set of s-arcs. Throws NotAutomorphism if a generator breaks an edge.
std::uint64_t s_arc_orbit_count(const Graph& g, const PermGroup& a, int s);

// Largest s such that A is transitive on s-arcs. Requires A to be vertex- and
// arc-transitive on a graph of valency at least 3 (cycles are rejected).
int transitivity_degree(const Graph& g, const PermGroup& a);

// The right-multiplication copy of G on the Cayley vertex enumeration of
// cayley_vertex_elements(G). Regular on the vertices.
PermGroup right_regular_representation(const PermGroup& g, std::uint64_t cap);

// True iff the right-regular copy of G is normal in Aut(Cay(G, S)).
bool is_normal_cayley(const CayleyGraphSpec& spec, std::uint64_t cap = 10000);

// Aut(G, S) realized inside the graph's automorphism group: the elements of
// the identity-vertex stabilizer that are multiplicative on vertex labels.
// Checks the normalizer identity |N_A(G)| = |G| * |Aut(G,S)| before returning.
PermGroup aut_g_s(const CayleyGraphSpec& spec, std::uint64_t cap = 10000,
                  std::uint64_t stabilizer_cap = 1000000);

// Exact isomorphism test by backtrack on the disjoint union (orbit method);
// disconnected inputs are matched component by component.
bool graphs_isomorphic(const Graph& a, const Graph& b,
                       std::uint64_t vertex_cap = 2000);

}  // namespace catg
