#include <doctest.h>

#include <polycontact/cylinder_poly.hpp>
#include <polycontact/errors.hpp>

#include "support.hpp"

using namespace polycontact;
using testsupport::frac;

TEST_CASE("lifted predicates match the line") {
  auto a = lift(parse_interval_polytope("[0,1]"), 3);
  auto b = lift(parse_interval_polytope("[1,2]"), 3);
  CHECK(contact_SC(a, b));
  CHECK(contact_C(a, b));
  CHECK_FALSE(overlap(a, b));
  auto w = sc_witness(a, b);
  REQUIRE(w);
  CHECK(w->dim == 3);
  CHECK(w->base.radius > 0);

  testsupport::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    auto p = testsupport::random_interval_polytope(rng), q = testsupport::random_interval_polytope(rng);
    for (int n : {1, 2, 5}) {
      auto lp = lift(p, n), lq = lift(q, n);
      CHECK(contact_SC(lp, lq) == contact_SC(p, q));
      CHECK(contact_C(lp, lq) == contact_C(p, q));
      CHECK(overlap(lp, lq) == overlap(p, q));
      CHECK(complement(lp) == lift(complement(p), n));
      CHECK(join(lp, lq) == lift(join(p, q), n));
      CHECK(reg_meet(lp, lq) == lift(reg_meet(p, q), n));
    }
  }
}

TEST_CASE("dimension checks") {
  auto a = lift(parse_interval_polytope("[0,1]"), 2);
  auto b = lift(parse_interval_polytope("[0,1]"), 3);
  CHECK_THROWS_AS(contact_SC(a, b), DimensionError);
  CHECK_THROWS_AS(join(a, b), DimensionError);
  CHECK_THROWS_AS(lift(IntervalPolytope::all(), 0), DimensionError);
  CHECK(a.contains(Point{frac(1, 2), 100}));
  CHECK_FALSE(a.contains(Point{2, 0}));
  CHECK_THROWS_AS(a.contains(Point{0}), DimensionError);
}

TEST_CASE("cylinder text format") {
  auto c = parse_cylinder_polytope("cyl n=3 { (-inf,0]; [1/2,3] }");
  CHECK(c.dim() == 3);
  CHECK(to_string(c) == "cyl n=3 { (-inf,0]; [1/2,3] }");
  CHECK(parse_cylinder_polytope(to_string(c)) == c);
  CHECK(parse_cylinder_polytope("cyl n=1 { empty }").is_empty());
  CHECK_THROWS_AS(parse_cylinder_polytope("cyl n=0 { all }"), ParseError);
  CHECK_THROWS_AS(parse_cylinder_polytope("cyl { all }"), ParseError);
  try {
    parse_cylinder_polytope("cyl n=2 { [0,x] }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 13);
  }
}
