#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "catg/perm_group.hpp"

namespace catg {

// Isomorphism-type fingerprint computed from an exhaustive element
// enumeration. Strong enough to separate the six soluble stabilizer
// candidates (this is checked at startup, not assumed).
struct GroupFingerprint {
  std::uint64_t order = 0;
  bool abelian = false;
  std::map<std::uint64_t, std::uint64_t> element_orders;  // order -> count
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;

  bool operator==(const GroupFingerprint&) const = default;
  std::string describe() const;
};

// Requires order(g) <= cap (default 200).
GroupFingerprint fingerprint(const PermGroup& g, std::uint64_t cap = 200);

// The soluble vertex-stabilizer candidates of pentavalent arc-transitive
// graphs: Z5, D10, D20 at s=1; F20, F20xZ2 at s=2; F20xZ4 at s=3.
enum class StabilizerTag { Z5, D10, D20, F20, F20xZ2, F20xZ4, Other };

const char* to_string(StabilizerTag tag);
std::uint64_t tag_order(StabilizerTag tag);

// Explicit reference realization of a tag as a permutation group.
PermGroup reference_realization(StabilizerTag tag);

// Matches fingerprint(g) against the six reference fingerprints; Other if
// none match. Requires order(g) <= 200.
StabilizerTag recognize_table3(const PermGroup& g);

// Largest s for which the tag occurs as an s-transitive stabilizer.
// Throws Error on Other.
int infer_s(StabilizerTag tag);

// Verifies that the six reference fingerprints are pairwise distinct and
// that each reference realization recognizes as itself. Throws on failure.
void check_table3_references();

}  // namespace catg
