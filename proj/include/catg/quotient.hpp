#pragma once

#include "catg/graph.hpp"
#include "catg/perm_group.hpp"

namespace catg {

// Normal quotient: vertices are the N-orbits, two distinct orbits adjacent
// iff some pair of their members is adjacent in the original graph.
struct QuotientResult {
  Graph quotient;
  std::vector<int> orbit_map;  // vertex -> orbit id (0-based)
  bool semiregular = false;    // all N-orbits have size order(N)
  bool valency_preserved = false;  // reported only under the quotient
                                   // hypotheses (5-regular, > 2 orbits)
  int orbit_count = 0;
};

// Requires N normal in X (checked) and X acting as automorphisms (checked).
// X and N act on vertices as 1-based points.
QuotientResult quotient_graph(const Graph& g, const PermGroup& x,
                              const PermGroup& n);

}  // namespace catg
