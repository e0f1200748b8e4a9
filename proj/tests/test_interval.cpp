#include <doctest.h>

#include <polycontact/errors.hpp>
#include <polycontact/interval_poly.hpp>

#include "support.hpp"

using namespace polycontact;
using testsupport::frac;

namespace {

IntervalPolytope P(std::string_view text) { return parse_interval_polytope(text); }

// Closed sets meet: some pair of pieces has max(lo) <= min(hi).
bool pieces_meet(const IntervalPolytope& p, const IntervalPolytope& q) {
  for (const auto& a : p.pieces())
    for (const auto& b : q.pieces()) {
      bool lo_ok = !a.lo || !b.hi || *a.lo <= *b.hi;
      bool hi_ok = !b.lo || !a.hi || *b.lo <= *a.hi;
      if (lo_ok && hi_ok) return true;
    }
  return false;
}

// Membership sampled on a fine grid covering all endpoints used by the generators.
bool same_on_grid(const IntervalPolytope& p, const IntervalPolytope& q) {
  for (int k = -80; k <= 80; ++k) {
    Rational x(k, 8);
    if (p.contains(x) != q.contains(x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("canonicalize merges, sorts and drops points") {
  auto merged = IntervalPolytope::canonicalize({{Rational(0), Rational(1)}, {Rational(1), Rational(2)}});
  CHECK(merged == IntervalPolytope::interval(0, 2));
  CHECK(IntervalPolytope::canonicalize({{Rational(3), Rational(3)}}).is_empty());
  auto sorted = IntervalPolytope::canonicalize(
      {{Rational(0), Rational(2)}, {Rational(1), Rational(5)}, {std::nullopt, Rational(-1)}});
  CHECK(to_string(sorted) == "(-inf,-1]; [0,5]");
  CHECK(IntervalPolytope::canonicalize({{std::nullopt, Rational(0)}, {Rational(0), std::nullopt}}).is_all());
}

TEST_CASE("complement") {
  CHECK(to_string(complement(P("[0,1]"))) == "(-inf,0]; [1,inf)");
  CHECK(complement(IntervalPolytope::empty()).is_all());
  CHECK(complement(IntervalPolytope::all()).is_empty());
  CHECK(to_string(complement(P("(-inf,1]; [2,inf)"))) == "[1,2]");
}

TEST_CASE("join and regularized meet") {
  CHECK(reg_meet(P("[0,1]"), P("[1,2]")).is_empty());
  CHECK(reg_meet(P("[0,2]"), P("[1,3]")) == P("[1,2]"));
  CHECK(to_string(join(P("[0,1]"), P("[2,3]"))) == "[0,1]; [2,3]");
}

TEST_CASE("contact relations on the line") {
  CHECK(contact_C(P("[0,1]"), P("[1,2]")));
  CHECK(contact_SC(P("[0,1]"), P("[1,2]")));
  CHECK_FALSE(overlap(P("[0,1]"), P("[1,2]")));

  CHECK_FALSE(contact_C(P("[0,1]"), P("[2,3]")));
  CHECK_FALSE(contact_SC(P("[0,1]"), P("[2,3]")));
  CHECK_FALSE(overlap(P("[0,1]"), P("[2,3]")));

  CHECK(contact_C(P("[0,1]"), P("[0,1]")));
  CHECK(contact_SC(P("[0,1]"), P("[0,1]")));
  CHECK(overlap(P("[0,1]"), P("[0,1]")));
}

TEST_CASE("strong-contact witness is an open interval inside the union meeting both") {
  testsupport::Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    auto p = testsupport::random_interval_polytope(rng), q = testsupport::random_interval_polytope(rng);
    auto w = sc_witness(p, q);
    CHECK(w.has_value() == contact_SC(p, q));
    if (!w) continue;
    REQUIRE(w->radius > 0);
    auto ball = IntervalPolytope::interval(w->centre - w->radius, w->centre + w->radius);
    CHECK(reg_meet(ball, complement(join(p, q))).is_empty());
    CHECK(overlap(ball, p));
    CHECK(overlap(ball, q));
  }
  CHECK_FALSE(sc_witness(P("[0,1]"), P("[2,3]")));
}

TEST_CASE("randomized properties") {
  testsupport::Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto x = testsupport::random_interval_polytope(rng);
    auto y = testsupport::random_interval_polytope(rng);
    auto z = testsupport::random_interval_polytope(rng);
    const auto zero = IntervalPolytope::empty();
    const auto one = IntervalPolytope::all();

    // C1-C4
    CHECK_FALSE(contact_SC(zero, x));
    CHECK(contact_SC(x, join(y, z)) == (contact_SC(x, y) || contact_SC(x, z)));
    CHECK(contact_SC(x, y) == contact_SC(y, x));
    if (!x.is_empty()) CHECK(contact_SC(x, x));

    CHECK(contact_SC(x, y) == pieces_meet(x, y));
    if (overlap(x, y)) CHECK(contact_SC(x, y));
    if (!x.is_empty() && !x.is_all()) CHECK(contact_SC(x, complement(x)));

    CHECK(complement(complement(x)) == x);
    CHECK(join(x, complement(x)) == one);
    CHECK(reg_meet(x, complement(x)) == zero);
    CHECK(join(x, reg_meet(x, y)) == x);
    CHECK(reg_meet(x, join(x, y)) == x);
    CHECK(reg_meet(x, join(y, z)) == join(reg_meet(x, y), reg_meet(x, z)));
    CHECK(join(x, reg_meet(y, z)) == reg_meet(join(x, y), join(x, z)));
    CHECK(join(x, y) == join(y, x));
    CHECK(reg_meet(x, reg_meet(y, z)) == reg_meet(reg_meet(x, y), z));

    // Grid cross-check of the set operations.
    for (int k = -80; k <= 80; ++k) {
      Rational t(2 * k + 1, 16);  // never an endpoint of a generated polytope
      CHECK(join(x, y).contains(t) == (x.contains(t) || y.contains(t)));
      CHECK(reg_meet(x, y).contains(t) == (x.contains(t) && y.contains(t)));
      CHECK(complement(x).contains(t) == !x.contains(t));
    }
    CHECK(same_on_grid(parse_interval_polytope(to_string(x)), x));
    CHECK(parse_interval_polytope(to_string(x)) == x);
  }
}

TEST_CASE("text format") {
  CHECK(to_string(P("(-inf,0]; [1/2,3]; [5,inf)")) == "(-inf,0]; [1/2,3]; [5,inf)");
  CHECK(P("empty").is_empty());
  CHECK(P("all").is_all());
  CHECK(to_string(IntervalPolytope::empty()) == "empty");
  CHECK(to_string(IntervalPolytope::all()) == "all");
  CHECK(P("[2/4, 6/4]") == IntervalPolytope::interval(frac(1, 2), frac(3, 2)));
  CHECK_THROWS_AS(P("[0,1"), ParseError);
  CHECK_THROWS_AS(P("(0,1]"), ParseError);
  CHECK_THROWS_AS(P("[0,inf]"), ParseError);
  CHECK_THROWS_AS(P("[0,1]; junk"), ParseError);
}
