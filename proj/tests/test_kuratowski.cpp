#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "pim/equation.hpp"
#include "pim/errors.hpp"
#include "pim/kuratowski.hpp"
#include "pim/monoid.hpp"

using namespace pim;

namespace {

FiniteTopology sierpinski_like() {
  // opens {}, {0}, {0,1} on two points
  return FiniteTopology{2, {0b00, 0b01, 0b11}};
}

void check_closure_axioms(const FiniteTopology& t) {
  SetOperation close = closure_op(t);
  const std::uint32_t full = t.full_mask();
  CHECK(close.apply(0) == 0);
  for (std::uint32_t a = 0; a <= full; ++a) {
    std::uint32_t ca = close.apply(a);
    CHECK((a & ~ca) == 0);                  // extensive
    CHECK(close.apply(ca) == ca);           // idempotent
    for (std::uint32_t b = 0; b <= full; ++b) {
      if ((a & ~b) == 0) {
        CHECK((close.apply(a) & ~close.apply(b)) == 0);  // monotone
      }
    }
  }
}

}  // namespace

TEST_CASE("validate_topology") {
  CHECK(!validate_topology(FiniteTopology{1, {0b0, 0b1}}));
  CHECK(!validate_topology(FiniteTopology{2, {0b00, 0b01, 0b10, 0b11}}));
  auto missing_full = validate_topology(FiniteTopology{2, {0b00, 0b01, 0b10}});
  REQUIRE(missing_full.has_value());
  CHECK(missing_full->axiom == "full set missing");
  auto no_union = validate_topology(FiniteTopology{2, {0b00, 0b11}});
  CHECK(!no_union);
  auto bad_union =
      validate_topology(FiniteTopology{3, {0b000, 0b001, 0b010, 0b111}});
  REQUIRE(bad_union.has_value());
  CHECK(bad_union->axiom == "not closed under union");
}

TEST_CASE("closure examples") {
  // discrete: closure is the identity
  FiniteTopology discrete{2, {0b00, 0b01, 0b10, 0b11}};
  CHECK(closure_op(discrete).table == identity_op(2).table);

  // indiscrete on two points: closure of any nonempty set is everything
  FiniteTopology indiscrete{2, {0b00, 0b11}};
  SetOperation close = closure_op(indiscrete);
  CHECK(close.apply(0b01) == 0b11);
  CHECK(close.apply(0b00) == 0b00);

  // opens {,{0},{0,1}}: closed sets are {}, {1}, {0,1}
  SetOperation sier = closure_op(sierpinski_like());
  CHECK(sier.apply(0b01) == 0b11);
  CHECK(sier.apply(0b10) == 0b10);
}

TEST_CASE("closure axioms hold on every small topology") {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteTopology& t : all_topologies(n)) {
      check_closure_axioms(t);
    }
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    check_closure_axioms(random_topology(rng, 5));
  }
}

TEST_CASE("complement is an involution") {
  for (int n : {1, 2, 5}) {
    SetOperation c = complement_op(n);
    CHECK(compose(c, c) == identity_op(n));
    CHECK(c.apply(0) == FiniteTopology{n, {}}.full_mask());
  }
  CHECK(complement_op(2).apply(0b01) == 0b10);
}

TEST_CASE("operation_monoid worked examples") {
  std::vector<std::pair<Generator, SetOperation>> just_complement{
      {Generator::inv, complement_op(2)}};
  CHECK(operation_monoid(just_complement, 8).size() == 2);

  FiniteTopology discrete{2, {0b00, 0b01, 0b10, 0b11}};
  std::vector<std::pair<Generator, SetOperation>> trivial_closure{
      {Generator::idem, closure_op(discrete)}};
  CHECK(operation_monoid(trivial_closure, 8).size() == 1);

  std::vector<std::pair<Generator, SetOperation>> both{
      {Generator::inv, complement_op(2)},
      {Generator::idem, closure_op(sierpinski_like())}};
  FiniteMonoid m = operation_monoid(both, 64);
  CHECK(m.size() <= 14);
}

TEST_CASE("operator words satisfy the closure-complement idempotency") {
  // the operator of the word DBDB is idempotent in every topology
  auto check = [](const FiniteTopology& t) {
    SetOperation dbdb = identity_op(t.n);
    SetOperation close = closure_op(t);
    SetOperation comp = complement_op(t.n);
    for (char c : std::string("DBDB")) {
      dbdb = compose(dbdb, c == 'D' ? comp : close);
    }
    CHECK(compose(dbdb, dbdb) == dbdb);
  };
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteTopology& t : all_topologies(n)) {
      check(t);
    }
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 25; ++i) {
    check(random_topology(rng, 6));
  }
}

TEST_CASE("orbit examples") {
  FiniteTopology discrete{3, {0, 1, 2, 3, 4, 5, 6, 7}};
  CHECK(orbit_size(discrete, 0b001) == 2);

  FiniteTopology indiscrete{2, {0b00, 0b11}};
  CHECK(orbit_size(indiscrete, 0b01) == 4);
  PointOrbit best = max_point_orbit(indiscrete);
  CHECK(best.size == 4);
  CHECK(best.subset == 0b01);  // first maximizer in mask order
}

TEST_CASE("classify_orbit identifies small operator monoids") {
  FiniteTopology discrete{2, {0b00, 0b01, 0b10, 0b11}};
  OrbitReport r = classify_orbit(discrete);
  CHECK(r.order == 2);
  CHECK(!r.matched.has_value());
  CHECK(r.monogenic);
  CHECK(r.classification() == "monogenic");

  OrbitReport sier = classify_orbit(sierpinski_like());
  CHECK(sier.order <= 14);
  CHECK(sier.matched.has_value());

  // indiscrete on two points: closure sends every nonempty set to the full
  // set; the operator monoid is {id, D, B, DB, BD, DBD} with BDB = BD
  FiniteTopology indiscrete{2, {0b00, 0b11}};
  OrbitReport r2 = classify_orbit(indiscrete);
  CHECK(r2.order == 6);
  REQUIRE(r2.matched.has_value());
  CHECK(*r2.matched == ParamEq::single(Family::f01, Parity::circ, 1));
}

TEST_CASE("bounds hold on every small topology") {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteTopology& t : all_topologies(n)) {
      CHECK(classify_orbit(t).order <= 14);
      CHECK(max_point_orbit(t).size <= 14);
    }
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    FiniteTopology t = random_topology(rng, 2 + static_cast<int>(rng() % 4));
    REQUIRE(!validate_topology(t));
    CHECK(classify_orbit(t).order <= 14);
    CHECK(max_point_orbit(t).size <= 14);
  }
}

TEST_CASE("topology file round trip") {
  std::string text = "n=3\n{}\n0\n0,1\n0,1,2\n";
  std::istringstream in(text);
  FiniteTopology t = parse_topology(in);
  CHECK(t.n == 3);
  CHECK(t.opens == std::vector<std::uint32_t>{0b000, 0b001, 0b011, 0b111});
  CHECK(topology_to_file(t) == text);

  std::istringstream braces("n=2\n{}\n{0}\n{0,1}\n");
  CHECK(parse_topology(braces).opens ==
        std::vector<std::uint32_t>{0b00, 0b01, 0b11});

  std::istringstream bad("n=2\n0,5\n");
  CHECK_THROWS_AS(parse_topology(bad), SyntaxError);
  std::istringstream empty("");
  CHECK_THROWS_AS(parse_topology(empty), SyntaxError);
}

TEST_CASE("random topologies are valid and exhaustive enumeration is sound") {
  CHECK(all_topologies(1).size() == 1);
  CHECK(all_topologies(2).size() == 4);
  CHECK(all_topologies(3).size() == 29);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    CHECK(!validate_topology(random_topology(rng, 7)));
  }
}

TEST_CASE("the witness search finds a full 14-element orbit") {
  auto witness = find_full_orbit_witness(2024, 400000);
  REQUIRE(witness.has_value());
  CHECK(!validate_topology(witness->topology));
  CHECK(orbit_size(witness->topology, witness->subset) == 14);
  OrbitReport report = classify_orbit(witness->topology);
  CHECK(report.order == 14);
  REQUIRE(report.matched.has_value());
  CHECK(*report.matched == ParamEq::family00(2, 2));
}
