#include "catg/perm.hpp"

#include <algorithm>
#include <numeric>

namespace catg {

Perm::Perm(int degree) {
  if (degree < 0) throw Error("negative degree");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm Perm::from_images(int degree, const std::vector<int>& images) {
  if (static_cast<int>(images.size()) != degree)
    throw Error("image table has wrong length");
  std::vector<std::uint32_t> raw(degree);
  std::vector<bool> seen(degree, false);
  for (int i = 0; i < degree; ++i) {
    int v = images[i];
    if (v < 1 || v > degree) throw PointOutOfRange(v, degree);
    if (seen[v - 1]) throw Error("image table is not a bijection: value " +
                                 std::to_string(v) + " repeats");
    seen[v - 1] = true;
    raw[i] = static_cast<std::uint32_t>(v - 1);
  }
  return Perm(std::move(raw));
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Perm(std::move(inv));
}

std::size_t Perm::hash() const {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t v : images_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  std::vector<std::uint32_t> r(p.images_.size());
  for (std::uint32_t i = 0; i < r.size(); ++i) r[i] = q.images_[p.images_[i]];
  return Perm(std::move(r));
}

Perm conjugate(const Perm& p, const Perm& g) {
  return compose(compose(g.inverse(), p), g);
}

CycleDecomposition decompose(const Perm& p) {
  CycleDecomposition d;
  d.degree = p.degree();
  std::vector<bool> seen(p.degree(), false);
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[start - 1]) continue;
    int x = start;
    std::vector<int> cyc;
    do {
      seen[x - 1] = true;
      cyc.push_back(x);
      x = static_cast<int>(p.raw(x - 1)) + 1;
    } while (x != start);
    if (cyc.size() >= 2) d.cycles.push_back(std::move(cyc));
  }
  return d;
}

std::uint64_t element_order(const Perm& p) {
  std::uint64_t result = 1;
  for (int len : cycle_type(p)) {
    std::uint64_t l = static_cast<std::uint64_t>(len);
    std::uint64_t g = std::gcd(result, l);
    std::uint64_t q = l / g;
    if (result > UINT64_MAX / q) throw Error("element order overflows 64 bits");
    result *= q;
  }
  return result;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> type;
  for (const auto& cyc : decompose(p).cycles)
    type.push_back(static_cast<int>(cyc.size()));
  std::sort(type.begin(), type.end());
  return type;
}

std::vector<int> fixed_points(const Perm& p) {
  std::vector<int> fixed;
  for (int i = 1; i <= p.degree(); ++i)
    if (p.raw(i - 1) == static_cast<std::uint32_t>(i - 1)) fixed.push_back(i);
  return fixed;
}

bool is_even(const Perm& p) {
  int transpositions = 0;
  for (int len : cycle_type(p)) transpositions += len - 1;
  return transpositions % 2 == 0;
}

Perm parse_cycles(std::string_view text, int degree) {
  if (degree < 0) throw Error("negative degree");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '\n' || text[i] == '\r'))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '('", i);
    std::size_t cycle_open = i;
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw ParseError("unterminated cycle", cycle_open);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9')
        throw ParseError("expected point or ')'", i);
      std::size_t num_start = i;
      long v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > degree) break;  // avoid overflow on absurd input
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point out of range 1.." + std::to_string(degree),
                         num_start);
      if (used[v - 1])
        throw ParseError("point " + std::to_string(v) + " repeated", num_start);
      used[v - 1] = true;
      cyc.push_back(static_cast<int>(v));
    }
    // apply the cycle
    for (std::size_t k = 0; k < cyc.size(); ++k)
      images[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Perm::from_images(degree, images);
}

std::string to_cycle_string(const Perm& p) {
  CycleDecomposition d = decompose(p);
  if (d.cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : d.cycles) {
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cyc[k]);
    }
    out += ')';
  }
  return out;
}

}  // namespace catg
