#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "catg/a79_fixture.hpp"
#include "catg/bigcount.hpp"
#include "catg/genfile.hpp"
#include "catg/perm_group.hpp"
#include "oracles.hpp"

using namespace catg;

namespace {

PermGroup symmetric_group(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i + 1;
  std::vector<Perm> gens{parse_cycles("(1 2)", n)};
  if (n > 2) {
    std::string big = "(";
    for (int i = 1; i <= n; ++i) big += std::to_string(i) + (i < n ? " " : ")");
    gens.push_back(parse_cycles(big, n));
  }
  return PermGroup::from_generators(gens);
}

}  // namespace

TEST_CASE("cyclic group of order 3") {
  PermGroup g = PermGroup::from_generators({parse_cycles("(1 2 3)", 3)});
  CHECK(g.order() == 3);
  CHECK(g.contains(parse_cycles("(1 3 2)", 3)));
  CHECK(!g.contains(parse_cycles("(1 2)", 3)));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(PermGroup::from_generators({}), Error);
  CHECK_THROWS_AS(
      PermGroup::from_generators({Perm(3), parse_cycles("(1 2)", 4)}),
      DegreeMismatch);
  PermGroup g = PermGroup::from_generators({parse_cycles("(1 2 3)", 3)});
  CHECK_THROWS_AS(g.contains(Perm(4)), DegreeMismatch);
}

TEST_CASE("bsgs order equals brute-force closure on random subgroups of S7") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    int n_gens = 1 + static_cast<int>(rng() % 3);
    std::vector<Perm> gens;
    for (int i = 0; i < n_gens; ++i) gens.push_back(oracles::random_perm(rng, 7));
    auto closure = oracles::brute_force_closure(gens);
    PermGroup g = PermGroup::from_generators(gens);
    CHECK(g.order() == BigCount(closure.size()));

    // membership agrees with a linear scan of the closure
    std::unordered_set<Perm> closure_set(closure.begin(), closure.end());
    for (int probe = 0; probe < 20; ++probe) {
      Perm p = oracles::random_perm(rng, 7);
      CHECK(g.contains(p) == (closure_set.count(p) > 0));
    }
    for (int probe = 0; probe < 5; ++probe) {
      const Perm& p = closure[rng() % closure.size()];
      CHECK(g.contains(p));
    }
  }
}

TEST_CASE("orbit and transitivity") {
  PermGroup g = PermGroup::from_generators({parse_cycles("(1 2 3)", 4)});
  CHECK(g.orbit(1) == std::vector<int>{1, 2, 3});
  CHECK(g.orbit(4) == std::vector<int>{4});
  CHECK(!g.is_transitive());
  CHECK_THROWS_AS(g.orbit(5), PointOutOfRange);

  GeneratorFile f = parse_generator_file(a79_fixture_text());
  PermGroup x1_group = PermGroup::from_generators({f.get("x1")});
  CHECK(!x1_group.is_transitive());  // x1 fixes 1
}

TEST_CASE("point stabilizer of S3") {
  PermGroup s3 = symmetric_group(3);
  PermGroup stab = s3.point_stabilizer(3);
  CHECK(stab.order() == 2);
  CHECK(stab.contains(parse_cycles("(1 2)", 3)));
}

TEST_CASE("orbit-stabilizer exactness on random subgroups") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Perm> gens{oracles::random_perm(rng, 8),
                           oracles::random_perm(rng, 8)};
    PermGroup g = PermGroup::from_generators(gens);
    for (int p = 1; p <= 8; ++p) {
      PermGroup stab = g.point_stabilizer(p);
      CHECK(g.order() == stab.order() * BigCount(g.orbit(p).size()));
    }
  }
}

TEST_CASE("element enumeration") {
  PermGroup g = PermGroup::from_generators({parse_cycles("(1 2)", 4)});
  auto elems = g.elements(10);
  REQUIRE(elems.size() == 2);
  CHECK(elems[0].is_identity());
  CHECK(elems[1] == parse_cycles("(1 2)", 4));

  PermGroup s7 = symmetric_group(7);
  CHECK_THROWS_AS(s7.elements(100), OrderExceedsCap);
}

TEST_CASE("intersection of disjoint transpositions is trivial") {
  PermGroup a = PermGroup::from_generators({parse_cycles("(1 2)", 4)});
  PermGroup b = PermGroup::from_generators({parse_cycles("(3 4)", 4)});
  PermGroup meet = intersection_small(a, b, 100);
  CHECK(meet.order() == 1);
}

TEST_CASE("self-intersection returns the group itself") {
  GeneratorFile f = parse_generator_file(a79_fixture_text());
  PermGroup h = PermGroup::from_generators({f.get("a"), f.get("b"), f.get("c")});
  PermGroup meet = intersection_small(h, h, 100);
  CHECK(meet.order() == 80);
}

TEST_CASE("intersection is symmetric as element sets") {
  std::mt19937 rng(4242);
  int checked = 0;
  while (checked < 10) {
    std::vector<Perm> ga{oracles::random_perm(rng, 6)};
    std::vector<Perm> gb{oracles::random_perm(rng, 6), oracles::random_perm(rng, 6)};
    PermGroup a = PermGroup::from_generators(ga);
    PermGroup b = PermGroup::from_generators(gb);
    if (b.order() > 5000) continue;
    PermGroup ab = intersection_small(a, b, 5000);
    PermGroup ba = intersection_small(b, a, 5000);
    CHECK(ab.order() == ba.order());
    for (const Perm& e : ab.elements(5000)) CHECK(ba.contains(e));
    ++checked;
  }
}

TEST_CASE("normality basics") {
  PermGroup s3 = symmetric_group(3);
  PermGroup a3 = PermGroup::from_generators({parse_cycles("(1 2 3)", 3)});
  CHECK(is_normal_in(a3, s3));
  CHECK(is_normal_in(a3, a3));
  PermGroup t = PermGroup::from_generators({parse_cycles("(1 2)", 3)});
  CHECK(!is_normal_in(t, s3));
  auto witness = non_normality_witness(t, s3);
  REQUIRE(witness.has_value());
  CHECK(!t.contains(conjugate(witness->first, witness->second)));
}

TEST_CASE("H = <a,b,c> has order 80 and is regular on 80 points") {
  GeneratorFile f = parse_generator_file(a79_fixture_text());
  PermGroup h = PermGroup::from_generators({f.get("a"), f.get("b"), f.get("c")});
  CHECK(h.order() == 80);
  CHECK(h.is_transitive());
  CHECK(h.is_regular());
  CHECK(h.point_stabilizer(1).order() == 1);

  // x1 lies outside H: oracle is the brute-force closure of H's 80 elements
  auto closure = oracles::brute_force_closure(h.generators());
  REQUIRE(closure.size() == 80);
  std::unordered_set<Perm> set(closure.begin(), closure.end());
  CHECK(set.count(f.get("x1")) == 0);
  CHECK(!h.contains(f.get("x1")));
}

TEST_CASE("conjugate subgroup and the order-16 intersection") {
  GeneratorFile f = parse_generator_file(a79_fixture_text());
  PermGroup h = PermGroup::from_generators({f.get("a"), f.get("b"), f.get("c")});
  PermGroup hx = conjugate_subgroup(h, f.get("x1"));
  CHECK(hx.order() == 80);

  // independent oracle: filter the 80 closure elements of H by membership in
  // the closure of H^{x1}
  auto h_elems = oracles::brute_force_closure(h.generators());
  auto hx_elems = oracles::brute_force_closure(hx.generators());
  std::unordered_set<Perm> hx_set(hx_elems.begin(), hx_elems.end());
  std::size_t in_both = 0;
  for (const Perm& e : h_elems)
    if (hx_set.count(e)) ++in_both;
  CHECK(in_both == 16);

  PermGroup meet = intersection_small(h, hx, 100);
  CHECK(meet.order() == 16);
}

TEST_CASE("strong generators sift to identity and base is deterministic") {
  GeneratorFile f = parse_generator_file(a79_fixture_text());
  PermGroup h = PermGroup::from_generators({f.get("a"), f.get("b"), f.get("c")});
  for (const Perm& s : h.strong_generators()) CHECK(h.contains(s));
  PermGroup h2 = PermGroup::from_generators({f.get("a"), f.get("b"), f.get("c")});
  CHECK(h.base() == h2.base());
}

TEST_CASE("alternating group on 80 points from the construction generators") {
  GeneratorFile f = parse_generator_file(a79_fixture_text());
  std::vector<Perm> gens{f.get("a"), f.get("b"), f.get("c"), f.get("x1")};
  for (const Perm& g : gens) CHECK(is_even(g));
  PermGroup x = PermGroup::from_generators(gens);
  CHECK(x.order() == factorial(80) / 2);
  CHECK(x.is_transitive());

  PermGroup stab = x.point_stabilizer(1);
  CHECK(stab.order() == factorial(79) / 2);

  // the standard generating pair of Alt({2..80}) sits inside the stabilizer
  Perm three_cycle = parse_cycles("(2 3 4)", 80);
  std::string big = "(";
  for (int i = 2; i <= 80; ++i) big += std::to_string(i) + (i < 80 ? " " : ")");
  Perm long_cycle = parse_cycles(big, 80);
  PermGroup g79 = PermGroup::from_generators({three_cycle, long_cycle});
  CHECK(g79.order() == factorial(79) / 2);
  CHECK(stab.contains(three_cycle));
  CHECK(stab.contains(long_cycle));

  CHECK(!is_normal_in(g79, x));
}
