#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "catg/errors.hpp"

namespace catg {

// A permutation of the points {1..n}, stored as an image table. Immutable
// after construction, so values can be shared freely across threads.
//
// Composition convention (right action): compose(p, q) applies p first and
// q second, so written products read left to right and x^(pq) = (x^p)^q.
// This matches exponent notation for conjugation: p^g = g^-1 p g.
//
// Points are 1-based in the entire public API; 0-based storage never leaks.
class Perm {
public:
  // Identity on `degree` points.
  explicit Perm(int degree);

  // `images[i-1]` is the image of point i (1-based values).
  static Perm from_images(int degree, const std::vector<int>& images);

  int degree() const { return static_cast<int>(images_.size()); }

  // Image of a 1-based point.
  int image(int point) const {
    if (point < 1 || point > degree()) throw PointOutOfRange(point, degree());
    return static_cast<int>(images_[point - 1]) + 1;
  }

  // Unchecked 0-based access for hot loops.
  std::uint32_t raw(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& raw_images() const { return images_; }

  bool is_identity() const;

  Perm inverse() const;

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  std::size_t hash() const;

private:
  explicit Perm(std::vector<std::uint32_t> raw) : images_(std::move(raw)) {}

  std::vector<std::uint32_t> images_;  // 0-based internally

  friend Perm compose(const Perm& p, const Perm& q);
};

// Product pq: apply p first, then q.
Perm compose(const Perm& p, const Perm& q);

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

// g^-1 p g.
Perm conjugate(const Perm& p, const Perm& g);

// Disjoint cycle decomposition. Fixed points are omitted; each cycle starts
// at its minimum point; cycles are ordered by first point.
struct CycleDecomposition {
  int degree = 0;
  std::vector<std::vector<int>> cycles;
};

CycleDecomposition decompose(const Perm& p);

// Least k >= 1 with p^k = identity (lcm of the cycle lengths).
std::uint64_t element_order(const Perm& p);

// Multiset of cycle lengths (>= 2 only), sorted ascending.
std::vector<int> cycle_type(const Perm& p);

std::vector<int> fixed_points(const Perm& p);

bool is_even(const Perm& p);

// Cycle-notation text. Grammar: perm := cycle* ; cycle := '(' int (ws int)* ')'.
// Unlisted points are fixed; empty text and "()" both parse to the identity.
// Errors report the byte offset of the offending token.
Perm parse_cycles(std::string_view text, int degree);

// Printed form: single spaces, cycles sorted by minimal point, fixed points
// omitted, identity printed as "()".
std::string to_cycle_string(const Perm& p);

}  // namespace catg

template <>
struct std::hash<catg::Perm> {
  std::size_t operator()(const catg::Perm& p) const { return p.hash(); }
};
