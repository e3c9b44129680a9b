#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catg/a79_fixture.hpp"
#include "catg/fingerprint.hpp"
#include "catg/genfile.hpp"
#include "oracles.hpp"

using namespace catg;

TEST_CASE("reference fingerprints are pairwise distinct") {
  CHECK_NOTHROW(check_table3_references());
}

TEST_CASE("cyclic group of order 5") {
  PermGroup z5 = PermGroup::from_generators({parse_cycles("(1 2 3 4 5)", 5)});
  GroupFingerprint fp = fingerprint(z5);
  CHECK(fp.order == 5);
  CHECK(fp.abelian);
  CHECK(fp.element_orders == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {5, 4}});
  CHECK(fp.center_order == 5);
  CHECK(fp.derived_order == 1);
}

TEST_CASE("dihedral of order 20 has no order-4 element and center of order 2") {
  GroupFingerprint fp = fingerprint(reference_realization(StabilizerTag::D20));
  CHECK(fp.order == 20);
  CHECK(fp.element_orders.count(4) == 0);
  CHECK(fp.center_order == 2);

  GroupFingerprint f20 = fingerprint(reference_realization(StabilizerTag::F20));
  CHECK(f20.order == 20);
  CHECK(f20.element_orders.count(4) == 1);  // the separating feature
}

TEST_CASE("H = <a,b,c> recognizes as F20xZ4") {
  GeneratorFile f = parse_generator_file(a79_fixture_text());
  PermGroup h = PermGroup::from_generators({f.get("a"), f.get("b"), f.get("c")});
  GroupFingerprint fp = fingerprint(h);
  CHECK(fp.order == 80);
  CHECK(!fp.abelian);
  CHECK(fp.element_orders.count(20) == 1);
  CHECK(fp.derived_order == 5);
  CHECK(recognize_table3(h) == StabilizerTag::F20xZ4);
}

TEST_CASE("D10 realization recognizes with s = 1") {
  PermGroup d10 = PermGroup::from_generators(
      {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 5)(3 4)", 5)});
  CHECK(recognize_table3(d10) == StabilizerTag::D10);
  CHECK(infer_s(StabilizerTag::D10) == 1);
}

TEST_CASE("S4 is not in the table") {
  PermGroup s4 = PermGroup::from_generators(
      {parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)});
  CHECK(recognize_table3(s4) == StabilizerTag::Other);
  CHECK_THROWS_AS(infer_s(StabilizerTag::Other), Error);
}

TEST_CASE("s values follow the table") {
  CHECK(infer_s(StabilizerTag::Z5) == 1);
  CHECK(infer_s(StabilizerTag::D10) == 1);
  CHECK(infer_s(StabilizerTag::D20) == 1);
  CHECK(infer_s(StabilizerTag::F20) == 2);
  CHECK(infer_s(StabilizerTag::F20xZ2) == 2);
  CHECK(infer_s(StabilizerTag::F20xZ4) == 3);
}

TEST_CASE("recognition is conjugation-invariant") {
  std::mt19937 rng(555);
  for (StabilizerTag tag :
       {StabilizerTag::Z5, StabilizerTag::D10, StabilizerTag::D20,
        StabilizerTag::F20, StabilizerTag::F20xZ2, StabilizerTag::F20xZ4}) {
    PermGroup ref = reference_realization(tag);
    for (int trial = 0; trial < 3; ++trial) {
      Perm g = oracles::random_perm(rng, ref.degree());
      CHECK(recognize_table3(conjugate_subgroup(ref, g)) == tag);
    }
  }
}

TEST_CASE("round trip: each reference realization recognizes as its own tag") {
  for (StabilizerTag tag :
       {StabilizerTag::Z5, StabilizerTag::D10, StabilizerTag::D20,
        StabilizerTag::F20, StabilizerTag::F20xZ2, StabilizerTag::F20xZ4}) {
    CHECK(recognize_table3(reference_realization(tag)) == tag);
    CHECK(to_u64(reference_realization(tag).order()) == tag_order(tag));
  }
}

TEST_CASE("fingerprint respects the order cap") {
  PermGroup s4xs3 = PermGroup::from_generators(
      {parse_cycles("(1 2)", 7), parse_cycles("(1 2 3 4)", 7),
       parse_cycles("(5 6 7)", 7), parse_cycles("(5 6)", 7)});
  CHECK(s4xs3.order() == 144);
  CHECK_NOTHROW(fingerprint(s4xs3, 200));
  CHECK_THROWS_AS(fingerprint(s4xs3, 100), OrderExceedsCap);
}
