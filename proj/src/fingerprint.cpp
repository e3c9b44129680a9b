#include "catg/fingerprint.hpp"

#include <array>
#include <unordered_set>

namespace catg {

std::string GroupFingerprint::describe() const {
  std::string s = "order " + std::to_string(order);
  s += abelian ? ", abelian" : ", non-abelian";
  s += ", center " + std::to_string(center_order);
  s += ", derived " + std::to_string(derived_order);
  s += ", element orders {";
  bool first = true;
  for (auto [o, count] : element_orders) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(o) + ":" + std::to_string(count);
  }
  return s + "}";
}

GroupFingerprint fingerprint(const PermGroup& g, std::uint64_t cap) {
  std::vector<Perm> elems = g.elements(cap);

  GroupFingerprint fp;
  fp.order = elems.size();

  for (const Perm& e : elems) ++fp.element_orders[element_order(e)];

  fp.abelian = true;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size() && fp.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size() && fp.abelian; ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i]))
        fp.abelian = false;

  // center: elements commuting with every generator
  std::uint64_t central = 0;
  for (const Perm& e : elems) {
    bool commutes = true;
    for (const Perm& s : gens) {
      if (compose(e, s) != compose(s, e)) {
        commutes = false;
        break;
      }
    }
    if (commutes) ++central;
  }
  fp.center_order = central;

  // derived subgroup: closure of all commutators
  std::unordered_set<Perm> commutators;
  for (const Perm& x : elems)
    for (const Perm& y : elems)
      commutators.insert(
          compose(compose(compose(x.inverse(), y.inverse()), x), y));
  std::vector<Perm> derived{Perm(g.degree())};
  std::unordered_set<Perm> seen(derived.begin(), derived.end());
  for (const Perm& c : commutators)
    if (seen.insert(c).second) derived.push_back(c);
  std::size_t next = 0;
  while (next < derived.size()) {
    Perm cur = derived[next++];
    for (const Perm& c : commutators) {
      Perm p = compose(cur, c);
      if (seen.insert(p).second) derived.push_back(p);
    }
  }
  fp.derived_order = derived.size();
  return fp;
}

const char* to_string(StabilizerTag tag) {
  switch (tag) {
    case StabilizerTag::Z5: return "Z5";
    case StabilizerTag::D10: return "D10";
    case StabilizerTag::D20: return "D20";
    case StabilizerTag::F20: return "F20";
    case StabilizerTag::F20xZ2: return "F20xZ2";
    case StabilizerTag::F20xZ4: return "F20xZ4";
    case StabilizerTag::Other: return "Other";
  }
  return "?";
}

std::uint64_t tag_order(StabilizerTag tag) {
  switch (tag) {
    case StabilizerTag::Z5: return 5;
    case StabilizerTag::D10: return 10;
    case StabilizerTag::D20: return 20;
    case StabilizerTag::F20: return 20;
    case StabilizerTag::F20xZ2: return 40;
    case StabilizerTag::F20xZ4: return 80;
    case StabilizerTag::Other: return 0;
  }
  return 0;
}

PermGroup reference_realization(StabilizerTag tag) {
  // Fixed explicit permutation realizations. Changing these must not change
  // any fingerprint (regression-tested).
  switch (tag) {
    case StabilizerTag::Z5:
      return PermGroup::from_generators({parse_cycles("(1 2 3 4 5)", 5)});
    case StabilizerTag::D10:
      return PermGroup::from_generators(
          {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 5)(3 4)", 5)});
    case StabilizerTag::D20:
      // dihedral group of order 20: 10-rotation plus a reflection
      return PermGroup::from_generators(
          {parse_cycles("(1 2 3 4 5 6 7 8 9 10)", 10),
           parse_cycles("(1 10)(2 9)(3 8)(4 7)(5 6)", 10)});
    case StabilizerTag::F20:
      // Frobenius group of order 20: translation and multiplication mod 5
      return PermGroup::from_generators(
          {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 3 5 4)", 5)});
    case StabilizerTag::F20xZ2:
      return PermGroup::from_generators({parse_cycles("(1 2 3 4 5)", 7),
                                         parse_cycles("(2 3 5 4)", 7),
                                         parse_cycles("(6 7)", 7)});
    case StabilizerTag::F20xZ4:
      return PermGroup::from_generators({parse_cycles("(1 2 3 4 5)", 9),
                                         parse_cycles("(2 3 5 4)", 9),
                                         parse_cycles("(6 7 8 9)", 9)});
    case StabilizerTag::Other:
      break;
  }
  throw Error("Other has no reference realization");
}

namespace {

constexpr std::array<StabilizerTag, 6> kTable3Tags = {
    StabilizerTag::Z5,     StabilizerTag::D10,    StabilizerTag::D20,
    StabilizerTag::F20,    StabilizerTag::F20xZ2, StabilizerTag::F20xZ4};

const std::array<GroupFingerprint, 6>& reference_fingerprints() {
  static const std::array<GroupFingerprint, 6> fps = [] {
    std::array<GroupFingerprint, 6> out;
    for (std::size_t i = 0; i < kTable3Tags.size(); ++i)
      out[i] = fingerprint(reference_realization(kTable3Tags[i]));
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (out[i] == out[j])
          throw Error(std::string("reference fingerprints of ") +
                      to_string(kTable3Tags[i]) + " and " +
                      to_string(kTable3Tags[j]) + " collide");
    return out;
  }();
  return fps;
}

}  // namespace

StabilizerTag recognize_table3(const PermGroup& g) {
  GroupFingerprint fp = fingerprint(g, 200);
  const auto& refs = reference_fingerprints();
  for (std::size_t i = 0; i < refs.size(); ++i)
    if (fp == refs[i]) return kTable3Tags[i];
  return StabilizerTag::Other;
}

int infer_s(StabilizerTag tag) {
  switch (tag) {
    case StabilizerTag::Z5:
    case StabilizerTag::D10:
    case StabilizerTag::D20:
      return 1;
    case StabilizerTag::F20:
    case StabilizerTag::F20xZ2:
      return 2;
    case StabilizerTag::F20xZ4:
      return 3;
    case StabilizerTag::Other:
      break;
  }
  throw Error("no s value for tag Other");
}

void check_table3_references() {
  (void)reference_fingerprints();  // throws on collision
  for (StabilizerTag tag : kTable3Tags) {
    PermGroup ref = reference_realization(tag);
    if (ref.order() != BigCount(tag_order(tag)))
      throw Error(std::string("reference realization of ") + to_string(tag) +
                  " has wrong order");
    if (recognize_table3(ref) != tag)
      throw Error(std::string("reference realization of ") + to_string(tag) +
                  " does not recognize as itself");
  }
}

}  // namespace catg
