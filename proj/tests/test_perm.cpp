#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catg/a79_fixture.hpp"
#include "catg/genfile.hpp"
#include "catg/perm.hpp"
#include "oracles.hpp"

using namespace catg;

TEST_CASE("parse single 3-cycle") {
  Perm p = parse_cycles("(1 2 3)", 3);
  CHECK(p.image(1) == 2);
  CHECK(p.image(2) == 3);
  CHECK(p.image(3) == 1);
}

TEST_CASE("empty text parses to identity") {
  Perm p = parse_cycles("", 5);
  CHECK(p.is_identity());
  CHECK(parse_cycles("()", 5).is_identity());
}

TEST_CASE("construction generator a parses at degree 80") {
  GeneratorFile f = parse_generator_file(a79_fixture_text());
  CHECK(f.degree == 80);
  const Perm& a = f.get("a");
  CHECK(a.image(1) == 16);
  CHECK(a.image(16) == 11);
}

TEST_CASE("compose applies left argument first") {
  Perm p = parse_cycles("(1 2)", 3);
  CHECK(compose(p, p).is_identity());
  Perm q = parse_cycles("(2 3)", 3);
  // (1 2) then (2 3): 1 -> 2 -> 3
  CHECK(compose(p, q).image(1) == 3);
  CHECK(compose(q, p).image(1) == 2);
}

TEST_CASE("conjugation matches exponent notation") {
  GeneratorFile f = parse_generator_file(a79_fixture_text());
  const Perm& b = f.get("b");
  const Perm& c = f.get("c");
  CHECK(conjugate(c, b) == compose(c, c));  // c^b = c^2

  Perm t = parse_cycles("(1 2 3)", 5);
  CHECK(conjugate(t, Perm(5)) == t);
}

TEST_CASE("element orders and fixed points of the bundled generators") {
  GeneratorFile f = parse_generator_file(a79_fixture_text());
  CHECK(element_order(f.get("a")) == 4);
  CHECK(element_order(f.get("c")) == 5);
  auto fixed = fixed_points(f.get("x1"));
  CHECK(std::find(fixed.begin(), fixed.end(), 1) != fixed.end());
  CHECK(element_order(f.get("x1")) == 2);
}

TEST_CASE("cycle type and parity") {
  Perm p = parse_cycles("(1 2)(3 4 5)", 6);
  CHECK(cycle_type(p) == std::vector<int>{2, 3});
  CHECK(!is_even(p));
  CHECK(is_even(parse_cycles("(1 2 3)", 3)));
  CHECK(element_order(p) == 6);
}

TEST_CASE("printing: sorted cycles, min-first, identity as ()") {
  CHECK(to_cycle_string(Perm(4)) == "()");
  Perm p = parse_cycles("(5 3 4)(2 1)", 5);
  CHECK(to_cycle_string(p) == "(1 2)(3 4 5)");
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_cycles("(1 2 9)", 5), ParseError);
  try {
    parse_cycles("(1 2 9)", 5);
  } catch (const ParseError& e) {
    CHECK(e.offset == 5);
  }
  try {
    parse_cycles("(1 2)(2 3)", 5);
  } catch (const ParseError& e) {
    CHECK(e.offset == 6);  // repeated point 2
  }
  CHECK_THROWS_AS(parse_cycles("(1 2", 5), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2)", 5), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 x)", 5), ParseError);
}

TEST_CASE("cross-degree operations are rejected") {
  Perm p(3), q(4);
  CHECK_THROWS_AS(compose(p, q), DegreeMismatch);
}

TEST_CASE("group axioms on random permutations") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 200);
    Perm p = oracles::random_perm(rng, n);
    Perm q = oracles::random_perm(rng, n);
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
    CHECK(compose(p, q).inverse() == compose(q.inverse(), p.inverse()));
    CHECK(element_order(conjugate(p, q)) == element_order(p));
  }
}

TEST_CASE("parse/print round-trip up to degree 200") {
  std::mt19937 rng(991);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 200);
    Perm p = oracles::random_perm(rng, n);
    CHECK(parse_cycles(to_cycle_string(p), n) == p);
  }
}

TEST_CASE("generator file round trip and errors") {
  GeneratorFile f = parse_generator_file("# comment\ndegree 6\ng0 = (1 2)\ng1 = (1 2 3 4 5 6)\n");
  CHECK(f.degree == 6);
  CHECK(f.entries.size() == 2);
  CHECK(f.get("g1").image(6) == 1);
  GeneratorFile g = parse_generator_file(write_generator_file(f));
  CHECK(g.entries.size() == 2);
  CHECK(g.get("g0") == f.get("g0"));

  CHECK_THROWS_AS(parse_generator_file("g = (1 2)\n"), ParseError);
  CHECK_THROWS_AS(parse_generator_file("degree 3\ng = (1 2)\ng = (1 3)\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_generator_file("degree 3\nbad name = (1 2)\n"),
                  ParseError);
  try {
    parse_generator_file("degree 3\na = (1 2)\nb = (1 4)\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}
