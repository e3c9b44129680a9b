#include "catg/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <unordered_set>

#include "catg/bigcount.hpp"
#include "catg/coset_graph.hpp"
#include "catg/graph_aut.hpp"

namespace catg {

namespace {

bool is_two_element(const Perm& p) {
  std::uint64_t o = element_order(p);
  return (o & (o - 1)) == 0;  // powers of two, including 1
}

std::vector<std::uint32_t> element_set_key(const std::vector<Perm>& elems) {
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(elems.size());
  for (const Perm& e : elems) rows.push_back(e.raw_images());
  std::sort(rows.begin(), rows.end());
  std::vector<std::uint32_t> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

unsigned worker_count(std::size_t tasks) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("CATG_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v < 256) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(tasks ? tasks : 1)));
}

}  // namespace

std::vector<CensusEntry> census_pentavalent(const PermGroup& x,
                                            std::uint64_t order_cap,
                                            std::uint64_t graph_cap) {
  std::vector<Perm> elems = x.elements(order_cap);

  // one generator per order-5 cyclic subgroup
  std::set<std::vector<std::uint32_t>> seen_sylow;
  std::vector<Perm> sylow_gens;
  for (const Perm& e : elems) {
    if (element_order(e) != 5) continue;
    Perm p2 = compose(e, e);
    Perm p3 = compose(p2, e);
    Perm p4 = compose(p3, e);
    Perm least = std::min(std::min(e, p2), std::min(p3, p4));
    if (seen_sylow.insert(least.raw_images()).second) sylow_gens.push_back(least);
  }

  std::vector<Perm> two_elements;
  for (const Perm& e : elems)
    if (is_two_element(e)) two_elements.push_back(e);

  // candidate stabilizers: Z5 extended by up to two normalizing 2-elements
  std::set<std::vector<std::uint32_t>> seen_h;
  std::vector<std::pair<PermGroup, StabilizerTag>> candidates_h;
  const std::set<std::uint64_t> allowed_orders{5, 10, 20, 40, 80};
  for (const Perm& s5 : sylow_gens) {
    std::unordered_set<Perm> powers{s5, compose(s5, s5),
                                    compose(compose(s5, s5), s5),
                                    compose(compose(compose(s5, s5), s5), s5)};
    std::vector<Perm> normalizing;
    for (const Perm& t : two_elements)
      if (powers.count(conjugate(s5, t))) normalizing.push_back(t);

    for (std::size_t i = 0; i < normalizing.size(); ++i) {
      for (std::size_t j = i; j < normalizing.size(); ++j) {
        std::vector<Perm> gens{s5};
        if (!normalizing[i].is_identity()) gens.push_back(normalizing[i]);
        if (!normalizing[j].is_identity() && normalizing[j] != normalizing[i])
          gens.push_back(normalizing[j]);
        PermGroup h = PermGroup::from_generators(gens);
        if (!fits_u64(h.order()) || !allowed_orders.count(to_u64(h.order())))
          continue;
        std::vector<Perm> h_elems = h.elements(80);
        if (!seen_h.insert(element_set_key(h_elems)).second) continue;
        StabilizerTag tag = recognize_table3(h);
        if (tag == StabilizerTag::Other) continue;
        candidates_h.emplace_back(std::move(h), tag);
      }
    }
  }

  // scan 2-elements g with g^2 in H; keep pentavalent connected specs
  struct Candidate {
    std::size_t h_index;
    Perm g;
  };
  std::vector<Candidate> candidates;
  for (std::size_t hi = 0; hi < candidates_h.size(); ++hi) {
    const PermGroup& h = candidates_h[hi].first;
    std::vector<Perm> h_elems = h.elements(80);
    std::unordered_set<Perm> h_set(h_elems.begin(), h_elems.end());
    for (const Perm& g : two_elements) {
      if (g.is_identity() || h_set.count(g)) continue;
      if (!h_set.count(compose(g, g))) continue;
      candidates.push_back({hi, g});
    }
  }

  std::vector<std::optional<CensusEntry>> results(candidates.size());
  auto evaluate = [&](std::size_t idx) {
    const auto& [h, tag] = candidates_h[candidates[idx].h_index];
    const Perm& g = candidates[idx].g;

    PermGroup conj = conjugate_subgroup(h, g);
    PermGroup meet = intersection_small(h, conj, 80);
    if (divide_exact(h.order(), meet.order()) != 5) return;

    std::vector<Perm> span = h.generators();
    span.push_back(g);
    if (PermGroup::from_generators(span).order() != x.order()) return;

    BigCount index = divide_exact(x.order(), h.order());
    if (index > BigCount(graph_cap)) return;

    CosetGraphSpec spec{x, h, g};
    CensusEntry entry;
    entry.h_generators = h.generators();
    entry.g = g;
    entry.valency = 5;
    entry.stabilizer_tag = tag;
    entry.s_value = infer_s(tag);
    entry.graph = materialize_coset_graph(spec, graph_cap);
    entry.vertex_count = entry.graph.vertex_count;
    entry.connected = entry.graph.is_connected();
    results[idx] = std::move(entry);
  };

  unsigned workers = worker_count(candidates.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= candidates.size()) return;
          evaluate(i);
        }
      });
    for (auto& t : pool) t.join();
  }

  // deduplicate up to isomorphism, in deterministic candidate order
  std::vector<CensusEntry> out;
  std::vector<BigCount> aut_orders;
  for (auto& result : results) {
    if (!result) continue;
    CensusEntry& entry = *result;
    BigCount aut_order = automorphism_group(entry.graph, graph_cap).order();
    bool duplicate = false;
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (out[k].vertex_count != entry.vertex_count) continue;
      if (aut_orders[k] != aut_order) continue;
      if (graphs_isomorphic(out[k].graph, entry.graph, graph_cap)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    aut_orders.push_back(aut_order);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace catg
