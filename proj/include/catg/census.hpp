#pragma once

#include <cstdint>
#include <vector>

#include "catg/fingerprint.hpp"
#include "catg/graph.hpp"
#include "catg/perm_group.hpp"

namespace catg {

// One connected arc-transitive pentavalent coset graph found in a group.
struct CensusEntry {
  std::vector<Perm> h_generators;
  Perm g = Perm(0);
  int valency = 5;
  int vertex_count = 0;
  StabilizerTag stabilizer_tag = StabilizerTag::Other;
  int s_value = 0;
  bool connected = true;
  Graph graph;
};

// Bounded census of connected pentavalent arc-transitive coset graphs
// Cos(X, H, g) with H a soluble stabilizer candidate (normal Sylow 5-subgroup,
// order in {5,10,20,40,80}) and g a 2-element with g^2 in H. Candidate H's are
// found by extending each order-5 cyclic subgroup by up to two normalizing
// 2-elements. Entries are deduplicated up to graph isomorphism.
//
// Parallelizes candidate evaluation over CATG_THREADS worker threads when the
// environment variable is set above 1; the merged result is identical to the
// sequential order.
std::vector<CensusEntry> census_pentavalent(const PermGroup& x,
                                            std::uint64_t order_cap = 10000,
                                            std::uint64_t graph_cap = 2000);

}  // namespace catg
