#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "catg/bigcount.hpp"
#include "catg/errors.hpp"
#include "catg/perm.hpp"

namespace catg {

namespace detail {

// One level of a stabilizer chain. The transversal is a Schreier vector:
// each orbit point remembers the point and generator it was discovered
// through, and representatives are rebuilt by path tracing, keeping memory
// O(n) per level.
struct BsgsLevel {
  int base = -1;                             // 0-based
  std::vector<Perm> gens;                    // strong generators at this level
  std::vector<Perm> gen_invs;                // parallel inverses
  std::vector<int> orbit;                    // discovery order, orbit[0] = base
  std::vector<int> orbit_pos;                // point -> orbit index, -1 if absent
  std::vector<std::pair<int, int>> via;      // parallel to orbit: (prev point, gen index)
  std::size_t done_orbit = 0;                // verified (orbit, gen) rectangle
  std::size_t done_gens = 0;
};

// Base and strong generating set, built by the deterministic Schreier-Sims
// algorithm (no randomization; base points are the smallest non-fixed point
// at each level, after any prescribed prefix).
class Bsgs {
public:
  Bsgs() = default;
  Bsgs(int degree, const std::vector<Perm>& gens,
       const std::vector<int>& base_prefix);

  int degree() const { return degree_; }
  const std::vector<BsgsLevel>& levels() const { return levels_; }

  BigCount order() const;

  // Sift p through levels [from..end). Returns the residue and the level
  // index at which sifting stopped (levels().size() on full strip).
  std::pair<Perm, int> strip(const Perm& p, int from = 0) const;

  bool contains(const Perm& p) const;

  // Transversal representative mapping the level's base to `point`.
  Perm rep(int level, int point) const;
  Perm rep_inverse(int level, int point) const;

private:
  void ensure_level_for(const Perm& h);
  void add_level(int base);
  void add_generator(int level, const Perm& h);
  void run();

  int degree_ = 0;
  std::vector<BsgsLevel> levels_;
};

}  // namespace detail

// A permutation group given by generators, with an eagerly built BSGS.
// Immutable after construction; safe for shared concurrent reads.
class PermGroup {
public:
  // Throws DegreeMismatch on unequal degrees and Error on an empty list.
  static PermGroup from_generators(std::vector<Perm> gens);

  // As above but with a prescribed initial base segment (1-based points).
  static PermGroup from_generators_with_base(std::vector<Perm> gens,
                                             const std::vector<int>& base_prefix);

  static PermGroup trivial(int degree);

  int degree() const { return degree_; }

  // The original generators (identity generators removed).
  const std::vector<Perm>& generators() const { return gens_; }

  std::vector<Perm> strong_generators() const;

  // Base points, 1-based.
  std::vector<int> base() const;

  const BigCount& order() const { return order_; }

  // Membership by sifting.
  bool contains(const Perm& p) const;

  // Orbit of a 1-based point, sorted ascending.
  std::vector<int> orbit(int point) const;

  bool is_transitive() const;

  // Transitive with order equal to the number of points.
  bool is_regular() const;

  PermGroup point_stabilizer(int point) const;

  // All elements, identity first, discovered by breadth-first closure over
  // the generator list. Throws OrderExceedsCap if order() > cap.
  std::vector<Perm> elements(std::uint64_t cap) const;

  Perm identity() const { return Perm(degree_); }

  const detail::Bsgs& bsgs() const { return bsgs_; }

private:
  PermGroup(int degree, std::vector<Perm> gens, const std::vector<int>& base_prefix);

  int degree_ = 0;
  std::vector<Perm> gens_;
  detail::Bsgs bsgs_;
  BigCount order_;
};

PermGroup conjugate_subgroup(const PermGroup& h, const Perm& g);

// Elements of H that lie in K, as a group. Requires order(H) <= cap.
PermGroup intersection_small(const PermGroup& h, const PermGroup& k,
                             std::uint64_t cap);

// True iff conjugate(n, g) stays in N for every generator n of N and g of G.
bool is_normal_in(const PermGroup& n, const PermGroup& g);

// First generator pair (n, g) with conjugate(n, g) outside N, if any.
std::optional<std::pair<Perm, Perm>> non_normality_witness(const PermGroup& n,
                                                           const PermGroup& g);

}  // namespace catg
