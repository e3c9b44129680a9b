#include "catg/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <unordered_set>

namespace catg {

namespace detail {

namespace {

int smallest_moved(const Perm& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p.raw(i) != static_cast<std::uint32_t>(i)) return i;
  return -1;
}

}  // namespace

Bsgs::Bsgs(int degree, const std::vector<Perm>& gens,
           const std::vector<int>& base_prefix)
    : degree_(degree) {
  for (int p : base_prefix) {
    if (p < 1 || p > degree) throw PointOutOfRange(p, degree);
    add_level(p - 1);
  }
  bool any = false;
  for (const Perm& g : gens) {
    if (g.is_identity()) continue;
    if (levels_.empty()) add_level(smallest_moved(g));
    add_generator(0, g);
    any = true;
  }
  if (!any) {
    // trivial group; keep prescribed levels (each with a one-point orbit)
    return;
  }
  run();
}

void Bsgs::add_level(int base) {
  BsgsLevel level;
  level.base = base;
  level.orbit_pos.assign(degree_, -1);
  level.orbit.push_back(base);
  level.orbit_pos[base] = 0;
  level.via.emplace_back(-1, -1);
  levels_.push_back(std::move(level));
}

void Bsgs::ensure_level_for(const Perm& h) {
  add_level(smallest_moved(h));
}

void Bsgs::add_generator(int level, const Perm& h) {
  BsgsLevel& L = levels_[level];
  L.gens.push_back(h);
  L.gen_invs.push_back(h.inverse());
  int new_gi = static_cast<int>(L.gens.size()) - 1;

  // Extend the orbit without touching existing Schreier vector entries, so
  // previously built representatives stay valid.
  std::queue<int> work;
  std::size_t old_size = L.orbit.size();
  for (std::size_t idx = 0; idx < old_size; ++idx) {
    int from = L.orbit[idx];
    int to = static_cast<int>(h.raw(from));
    if (L.orbit_pos[to] < 0) {
      L.orbit_pos[to] = static_cast<int>(L.orbit.size());
      L.orbit.push_back(to);
      L.via.emplace_back(from, new_gi);
      work.push(to);
    }
  }
  while (!work.empty()) {
    int from = work.front();
    work.pop();
    for (std::size_t gi = 0; gi < L.gens.size(); ++gi) {
      int to = static_cast<int>(L.gens[gi].raw(from));
      if (L.orbit_pos[to] < 0) {
        L.orbit_pos[to] = static_cast<int>(L.orbit.size());
        L.orbit.push_back(to);
        L.via.emplace_back(from, static_cast<int>(gi));
        work.push(to);
      }
    }
  }
}

Perm Bsgs::rep(int level, int point) const {
  const BsgsLevel& L = levels_[level];
  assert(L.orbit_pos[point] >= 0);
  std::vector<int> path;
  int x = point;
  while (x != L.base) {
    auto [prev, gi] = L.via[L.orbit_pos[x]];
    path.push_back(gi);
    x = prev;
  }
  Perm u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = compose(u, L.gens[*it]);
  return u;
}

Perm Bsgs::rep_inverse(int level, int point) const {
  const BsgsLevel& L = levels_[level];
  assert(L.orbit_pos[point] >= 0);
  Perm u(degree_);
  int x = point;
  while (x != L.base) {
    auto [prev, gi] = L.via[L.orbit_pos[x]];
    u = compose(u, L.gen_invs[gi]);
    x = prev;
  }
  return u;
}

std::pair<Perm, int> Bsgs::strip(const Perm& p, int from) const {
  Perm r = p;
  for (int l = from; l < static_cast<int>(levels_.size()); ++l) {
    int img = static_cast<int>(r.raw(levels_[l].base));
    if (img == levels_[l].base) continue;
    if (levels_[l].orbit_pos[img] < 0) return {r, l};
    r = compose(r, rep_inverse(l, img));
  }
  return {r, static_cast<int>(levels_.size())};
}

void Bsgs::run() {
  // Deterministic Schreier-Sims, verified bottom-up: at the time level i is
  // scanned, every deeper level already satisfies the Schreier condition, so
  // sifting through them is authoritative.
  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    // Note: adding a generator below can reallocate levels_, so index into
    // it directly and bail out of the scan right after any mutation.
    for (std::size_t oi = 0; !restarted && oi < levels_[i].orbit.size(); ++oi) {
      for (std::size_t gi = 0; !restarted && gi < levels_[i].gens.size(); ++gi) {
        if (oi < levels_[i].done_orbit && gi < levels_[i].done_gens) continue;
        int gamma = levels_[i].orbit[oi];
        int gamma_s = static_cast<int>(levels_[i].gens[gi].raw(gamma));
        Perm sg = compose(compose(rep(i, gamma), levels_[i].gens[gi]),
                          rep_inverse(i, gamma_s));
        if (sg.is_identity()) continue;
        auto [h, j] = strip(sg, i + 1);
        if (h.is_identity()) continue;
        if (j == static_cast<int>(levels_.size())) ensure_level_for(h);
        for (int l = i + 1; l <= j; ++l) add_generator(l, h);
        i = j;
        restarted = true;
      }
    }
    if (!restarted) {
      levels_[i].done_orbit = levels_[i].orbit.size();
      levels_[i].done_gens = levels_[i].gens.size();
      --i;
    }
  }
}

BigCount Bsgs::order() const {
  BigCount n = 1;
  for (const BsgsLevel& L : levels_) n *= static_cast<unsigned>(L.orbit.size());
  return n;
}

bool Bsgs::contains(const Perm& p) const {
  auto [r, level] = strip(p, 0);
  return level == static_cast<int>(levels_.size()) && r.is_identity();
}

}  // namespace detail

PermGroup::PermGroup(int degree, std::vector<Perm> gens,
                     const std::vector<int>& base_prefix)
    : degree_(degree), gens_(std::move(gens)) {
  bsgs_ = detail::Bsgs(degree_, gens_, base_prefix);
  order_ = bsgs_.order();
}

PermGroup PermGroup::from_generators(std::vector<Perm> gens) {
  return from_generators_with_base(std::move(gens), {});
}

PermGroup PermGroup::from_generators_with_base(
    std::vector<Perm> gens, const std::vector<int>& base_prefix) {
  if (gens.empty()) throw Error("empty generator list");
  int degree = gens.front().degree();
  for (const Perm& g : gens)
    if (g.degree() != degree) throw DegreeMismatch(degree, g.degree());
  std::vector<Perm> kept;
  for (Perm& g : gens)
    if (!g.is_identity()) kept.push_back(std::move(g));
  return PermGroup(degree, std::move(kept), base_prefix);
}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup(degree, {}, {});
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  std::unordered_set<Perm> seen;
  for (const auto& level : bsgs_.levels())
    for (const Perm& g : level.gens)
      if (seen.insert(g).second) out.push_back(g);
  return out;
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& level : bsgs_.levels()) b.push_back(level.base + 1);
  return b;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw DegreeMismatch(degree_, p.degree());
  return bsgs_.contains(p);
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 1 || point > degree_) throw PointOutOfRange(point, degree_);
  std::vector<bool> seen(degree_, false);
  std::vector<int> out;
  std::queue<int> work;
  seen[point - 1] = true;
  work.push(point - 1);
  out.push_back(point);
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (const Perm& g : gens_) {
      int y = static_cast<int>(g.raw(x));
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y + 1);
        work.push(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return static_cast<int>(orbit(1).size()) == degree_;
}

bool PermGroup::is_regular() const {
  return is_transitive() && order_ == BigCount(degree_);
}

PermGroup PermGroup::point_stabilizer(int point) const {
  if (point < 1 || point > degree_) throw PointOutOfRange(point, degree_);
  if (gens_.empty()) return trivial(degree_);
  detail::Bsgs chain(degree_, gens_, {point});
  std::vector<Perm> stab_gens;
  std::unordered_set<Perm> seen;
  const auto& levels = chain.levels();
  for (std::size_t l = 1; l < levels.size(); ++l)
    for (const Perm& g : levels[l].gens)
      if (seen.insert(g).second) stab_gens.push_back(g);
  if (stab_gens.empty()) return trivial(degree_);
  return PermGroup(degree_, std::move(stab_gens), {});
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > BigCount(cap)) throw OrderExceedsCap(to_string(order_), cap);
  std::vector<Perm> out;
  std::unordered_set<Perm> seen;
  Perm id(degree_);
  out.push_back(id);
  seen.insert(id);
  std::size_t next = 0;
  while (next < out.size()) {
    Perm current = out[next++];
    for (const Perm& g : gens_) {
      Perm product = compose(current, g);
      if (seen.insert(product).second) out.push_back(std::move(product));
    }
  }
  assert(BigCount(out.size()) == order_);
  return out;
}

PermGroup conjugate_subgroup(const PermGroup& h, const Perm& g) {
  if (g.degree() != h.degree()) throw DegreeMismatch(h.degree(), g.degree());
  if (h.generators().empty()) return PermGroup::trivial(h.degree());
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm& x : h.generators()) gens.push_back(conjugate(x, g));
  return PermGroup::from_generators(std::move(gens));
}

PermGroup intersection_small(const PermGroup& h, const PermGroup& k,
                             std::uint64_t cap) {
  if (h.degree() != k.degree()) throw DegreeMismatch(h.degree(), k.degree());
  std::vector<Perm> found;
  for (const Perm& e : h.elements(cap)) {
    if (e.is_identity()) continue;
    if (k.contains(e)) found.push_back(e);
  }
  if (found.empty()) return PermGroup::trivial(h.degree());
  return PermGroup::from_generators(std::move(found));
}

bool is_normal_in(const PermGroup& n, const PermGroup& g) {
  return !non_normality_witness(n, g).has_value();
}

std::optional<std::pair<Perm, Perm>> non_normality_witness(const PermGroup& n,
                                                           const PermGroup& g) {
  if (n.degree() != g.degree()) throw DegreeMismatch(n.degree(), g.degree());
  for (const Perm& x : n.generators())
    for (const Perm& y : g.generators())
      if (!n.contains(conjugate(x, y))) return std::make_pair(x, y);
  return std::nullopt;
}

}  // namespace catg
