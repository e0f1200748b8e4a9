#include <doctest.h>

#include <polycontact/algebra.hpp>
#include <polycontact/projection.hpp>

#include "support.hpp"

#include <set>

using namespace polycontact;
using testsupport::frac;

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

AdjacencySpace path3() { return mk_space({"a", "b", "c"}, Edges{{"a", "b"}, {"b", "c"}}); }
AdjacencySpace triangle() { return mk_space({"a", "b", "c"}, Edges{{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

// Contact of explicit name sets, straight from the definition.
bool naive_contact(const AdjacencySpace& f, const std::set<std::string>& a, const std::set<std::string>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (x == y || f.adjacent(f.index(x), f.index(y))) return true;
  return false;
}

std::set<std::string> names_of(const AdjacencySpace& f, std::uint64_t mask) {
  std::set<std::string> out;
  for (Cell c = 0; c < f.size(); ++c)
    if (mask >> c & 1) out.insert(f.name(c));
  return out;
}

}  // namespace

TEST_CASE("induced contact agrees with the definition") {
  testsupport::Rng rng(11);
  for (int round = 0; round < 20; ++round) {
    auto f = testsupport::random_connected_space(rng, 2 + round % 5, round % 3);
    FiniteContactAlgebra alg(f);
    for (std::uint64_t a = 0; a <= alg.one(); ++a)
      for (std::uint64_t b = 0; b <= alg.one(); ++b)
        REQUIRE(alg.contact(a, b) == naive_contact(f, names_of(f, a), names_of(f, b)));
  }
}

TEST_CASE("contact pairs on a path of three cells") {
  FiniteContactAlgebra alg(path3());
  int count = 0;
  for (std::uint64_t a = 1; a <= alg.one(); ++a)
    for (std::uint64_t b = 1; b <= alg.one(); ++b) count += alg.contact(a, b);
  // 49 pairs of nonempty subsets, only {a},{c} in both orders miss.
  CHECK(count == 47);
  CHECK(alg.describe(0b101) == "{a,c}");
  CHECK(alg.describe(0) == "{}");
  CHECK(alg.complement(0b001) == 0b110);
}

TEST_CASE("induced algebras satisfy the axioms") {
  testsupport::Rng rng(5);
  for (int round = 0; round < 8; ++round) {
    auto f = testsupport::random_connected_space(rng, 1 + round % 4, round % 2);
    auto report = audit_axioms(FiniteContactAlgebra(f));
    INFO(report.text());
    CHECK(report.all_passed());
    CHECK(report.triples == (std::size_t{1} << (3 * f.size())));
  }
  auto report = audit_axioms(FiniteContactAlgebra(triangle()));
  CHECK(report.text() ==
        "C1 PASS\nC2 PASS\nC3 PASS\nC4 PASS\nmonotonicity PASS\noverlap-extension PASS\n");
}

TEST_CASE("asymmetric relation fails C3 with a witness") {
  auto alg = FiniteContactAlgebra::from_relation_unchecked({"a", "b"}, {{1, 1}, {0, 1}});
  auto report = audit_axioms(alg);
  CHECK_FALSE(report.check("C3").passed);
  CHECK(report.check("C3").witness == "x={a} y={b}");
  CHECK(report.check("C1").passed);
  CHECK(report.check("C4").passed);
  CHECK(report.text().find("C3 FAIL x={a} y={b}\n") != std::string::npos);
}

TEST_CASE("irreflexive relation fails C4") {
  auto alg = FiniteContactAlgebra::from_relation_unchecked({"a", "b"}, {{0, 1}, {1, 0}});
  auto report = audit_axioms(alg);
  CHECK_FALSE(report.check("C4").passed);
  CHECK(report.check("C4").witness == "x={a}");
  CHECK_FALSE(report.check("overlap-extension").passed);
  CHECK(report.check("C3").passed);
}

TEST_CASE("connectedness of induced algebras") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& f : connected_spaces(n, false)) CHECK(is_connected_algebra(FiniteContactAlgebra(f)));
  auto split = mk_space({"a", "b", "c"}, Edges{{"b", "c"}});
  auto w = connectedness_witness(FiniteContactAlgebra(split));
  REQUIRE(w.has_value());
  CHECK(*w == 0b001);
}

TEST_CASE("sampled audits of the polytope algebras") {
  std::function<IntervalPolytope(std::mt19937_64&)> line = testsupport::random_interval_polytope;
  auto r1 = audit_axioms(IntervalAlgebra(), line, 400, 3);
  INFO(r1.text());
  CHECK(r1.all_passed());

  std::function<PlanePolytope(std::mt19937_64&)> plane = testsupport::random_bounded_polytope;
  auto r2 = audit_axioms(PlaneAlgebra(), plane, 40, 4);
  INFO(r2.text());
  CHECK(r2.all_passed());

  CylinderAlgebra cyl(3);
  std::function<CylinderPolytope(std::mt19937_64&)> slabs = [](std::mt19937_64& rng) {
    return lift(testsupport::random_interval_polytope(rng), 3);
  };
  auto r3 = audit_axioms(cyl, slabs, 200, 5);
  INFO(r3.text());
  CHECK(r3.all_passed());

  CHECK_FALSE(connectedness_witness(IntervalAlgebra(), line, 200, 6).has_value());
}

TEST_CASE("overlap is not a contact relation") {
  // Overlap ignores boundary contact, so C2 survives but it differs from SC.
  auto a = IntervalPolytope::interval(0, 1), b = IntervalPolytope::interval(1, 2);
  CHECK_FALSE(IntervalAlgebra(ContactKind::Overlap).contact(a, b));
  CHECK(IntervalAlgebra(ContactKind::Strong).contact(a, b));
  CHECK(IntervalAlgebra(ContactKind::Topological).contact(a, b));
  auto corner1 = parse_plane_polytope("poly { basic { 1 0 <= 1; -1 0 <= 0; 0 1 <= 1; 0 -1 <= 0; } }");
  auto corner2 = parse_plane_polytope("poly { basic { 1 0 <= 2; -1 0 <= -1; 0 1 <= 2; 0 -1 <= -1; } }");
  CHECK(PlaneAlgebra(ContactKind::Topological).contact(corner1, corner2));
  CHECK_FALSE(PlaneAlgebra(ContactKind::Strong).contact(corner1, corner2));
}

TEST_CASE("merging a path onto the line") {
  auto f = path3();
  std::vector<IntervalPolytope> images{parse_interval_polytope("(-inf,1]"), parse_interval_polytope("[1,2]"),
                                       parse_interval_polytope("[2,inf)")};
  IntervalAlgebra alg;
  CHECK(merged(alg, images, 0b011) == parse_interval_polytope("(-inf,2]"));
  auto report = verify_merging(alg, f, images);
  INFO(report.text());
  CHECK(report.all_passed());
  CHECK(report.exhaustive);
  CHECK(report.pairs == 64);
}

TEST_CASE("merging a triangle onto the line fails contact") {
  std::vector<IntervalPolytope> images{parse_interval_polytope("(-inf,1]"), parse_interval_polytope("[1,2]"),
                                       parse_interval_polytope("[2,inf)")};
  auto report = verify_merging(IntervalAlgebra(), triangle(), images);
  CHECK(report.check("injective").passed);
  CHECK(report.check("join").passed);
  CHECK_FALSE(report.check("contact-SC").passed);
  CHECK(report.check("contact-SC").witness == "a={a} b={c}");
}

TEST_CASE("merging detects bad images") {
  std::vector<IntervalPolytope> overlapping{parse_interval_polytope("(-inf,2]"), parse_interval_polytope("[1,3]"),
                                            parse_interval_polytope("[2,inf)")};
  auto report = verify_merging(IntervalAlgebra(), path3(), overlapping);
  CHECK_FALSE(report.check("complement").passed);
  std::vector<IntervalPolytope> gap{parse_interval_polytope("(-inf,1]"), parse_interval_polytope("[2,3]"),
                                    parse_interval_polytope("[3,inf)")};
  auto r2 = verify_merging(IntervalAlgebra(), path3(), gap);
  CHECK_FALSE(r2.check("bottom-top").passed);
  CHECK_THROWS_AS(verify_merging(IntervalAlgebra(), path3(), std::vector<IntervalPolytope>(2)), std::invalid_argument);
}

TEST_CASE("projected trees merge into cylinder algebras") {
  for (std::size_t n = 1; n <= 6; ++n)
  {
    auto trees = testsupport::all_labelled_trees(n);
    std::size_t step = n >= 5 ? trees.size() / 20 : 1;  // thin out the larger cases
    for (std::size_t i = 0; i < trees.size(); i += step) {
      const auto& t = trees[i];
      auto j = arrangement(t, numeration(t, 0));
      auto images = project(t, j, 2);
      auto report = verify_merging(CylinderAlgebra(2), t, images);
      INFO(to_string(t));
      INFO(report.text());
      REQUIRE(report.all_passed());
    }
  }
}

TEST_CASE("large spaces are sampled") {
  testsupport::Rng rng(9);
  auto f = testsupport::random_connected_space(rng, 9, 0);
  auto j = arrangement(f, numeration(f, 0));
  auto report = verify_merging(CylinderAlgebra(3), f, project(f, j, 3), 300, 2);
  CHECK_FALSE(report.exhaustive);
  CHECK(report.pairs == 300);
  CHECK(report.all_passed());
}
