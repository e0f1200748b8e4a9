#pragma once

#include <polycontact/adjacency.hpp>
#include <polycontact/cylinder_poly.hpp>
#include <polycontact/interval_poly.hpp>
#include <polycontact/plane_poly.hpp>

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace polycontact {

template <class A>
concept ContactAlgebra = requires(const A& alg, const typename A::Element& x, const typename A::Element& y) {
  { alg.zero() } -> std::convertible_to<typename A::Element>;
  { alg.one() } -> std::convertible_to<typename A::Element>;
  { alg.complement(x) } -> std::convertible_to<typename A::Element>;
  { alg.join(x, y) } -> std::convertible_to<typename A::Element>;
  { alg.meet(x, y) } -> std::convertible_to<typename A::Element>;
  { alg.equal(x, y) } -> std::convertible_to<bool>;
  { alg.contact(x, y) } -> std::convertible_to<bool>;
  { alg.describe(x) } -> std::convertible_to<std::string>;
};

// Power set of the cells of a space, elements as bitmasks (bit i = cell i), with
// C(a, b) iff some x in a and y in b have xRy.
class FiniteContactAlgebra {
public:
  using Element = std::uint64_t;

  explicit FiniteContactAlgebra(const AdjacencySpace& f);
  // Test hook: uses `relation` as given, without reflexive or symmetric closure.
  static FiniteContactAlgebra from_relation_unchecked(std::vector<std::string> cells,
                                                      std::vector<std::vector<char>> relation);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& cells() const { return names_; }
  Element singleton(Cell c) const { return Element{1} << c; }

  Element zero() const { return 0; }
  Element one() const { return full_; }
  Element complement(Element x) const { return ~x & full_; }
  Element join(Element x, Element y) const { return x | y; }
  Element meet(Element x, Element y) const { return x & y; }
  bool equal(Element x, Element y) const { return x == y; }
  bool contact(Element x, Element y) const;
  // `{a,c}`
  std::string describe(Element x) const;

private:
  FiniteContactAlgebra() = default;

  std::vector<std::string> names_;
  std::vector<Element> rows_;  // rows_[x] = cells related to x
  Element full_ = 0;
};

FiniteContactAlgebra induced_algebra(const AdjacencySpace& f);

enum class ContactKind { Strong, Topological, Overlap };

class IntervalAlgebra {
public:
  using Element = IntervalPolytope;
  explicit IntervalAlgebra(ContactKind kind = ContactKind::Strong) : kind_(kind) {}

  Element zero() const { return IntervalPolytope::empty(); }
  Element one() const { return IntervalPolytope::all(); }
  Element complement(const Element& x) const { return polycontact::complement(x); }
  Element join(const Element& x, const Element& y) const { return polycontact::join(x, y); }
  Element meet(const Element& x, const Element& y) const { return reg_meet(x, y); }
  bool equal(const Element& x, const Element& y) const { return x == y; }
  bool contact(const Element& x, const Element& y) const;
  bool touches(const Element& x, const Element& y) const { return contact_C(x, y); }
  std::string describe(const Element& x) const { return to_string(x); }

private:
  ContactKind kind_;
};

class PlaneAlgebra {
public:
  using Element = PlanePolytope;
  explicit PlaneAlgebra(ContactKind kind = ContactKind::Strong) : kind_(kind) {}

  Element zero() const { return PlanePolytope::empty(); }
  Element one() const { return PlanePolytope::all(); }
  Element complement(const Element& x) const { return polycontact::complement(x); }
  Element join(const Element& x, const Element& y) const { return polycontact::join(x, y); }
  Element meet(const Element& x, const Element& y) const { return reg_meet(x, y); }
  bool equal(const Element& x, const Element& y) const { return equals(x, y); }
  bool contact(const Element& x, const Element& y) const;
  bool touches(const Element& x, const Element& y) const { return contact_C(x, y); }
  std::string describe(const Element& x) const { return to_string(x); }

private:
  ContactKind kind_;
};

class CylinderAlgebra {
public:
  using Element = CylinderPolytope;
  explicit CylinderAlgebra(int dim, ContactKind kind = ContactKind::Strong) : dim_(dim), kind_(kind) {}

  int dim() const { return dim_; }
  Element zero() const { return CylinderPolytope::empty(dim_); }
  Element one() const { return CylinderPolytope::all(dim_); }
  Element complement(const Element& x) const { return polycontact::complement(x); }
  Element join(const Element& x, const Element& y) const { return polycontact::join(x, y); }
  Element meet(const Element& x, const Element& y) const { return reg_meet(x, y); }
  bool equal(const Element& x, const Element& y) const { return x == y; }
  bool contact(const Element& x, const Element& y) const;
  bool touches(const Element& x, const Element& y) const { return contact_C(x, y); }
  std::string describe(const Element& x) const { return to_string(x); }

private:
  int dim_;
  ContactKind kind_;
};

// --- axiom audit -----------------------------------------------------------

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // first counterexample
};

struct AuditReport {
  std::vector<AxiomCheck> checks;
  std::size_t triples = 0;

  bool all_passed() const;
  const AxiomCheck& check(const std::string& name) const;
  // One line per axiom: `C1 PASS` or `C3 FAIL x={a} y={b}`.
  std::string text() const;
};

// Feeds triples to the contact axioms (C1)-(C4), monotonicity and the
// overlap extension, recording the first failure of each.
template <ContactAlgebra A>
class AxiomAuditor {
public:
  explicit AxiomAuditor(const A& alg) : alg_(alg) {
    for (const char* n : {"C1", "C2", "C3", "C4", "monotonicity", "overlap-extension"}) report_.checks.push_back({n, true, {}});
  }

  void visit(const typename A::Element& x, const typename A::Element& y, const typename A::Element& z) {
    ++report_.triples;
    const auto zero = alg_.zero();
    bool cxy = alg_.contact(x, y);
    // C1: no contact with 0
    if (alg_.contact(zero, x)) fail(0, "x=" + alg_.describe(x));
    // C2: C(x, y + z) <=> C(x, y) or C(x, z)
    if (alg_.contact(x, alg_.join(y, z)) != (cxy || alg_.contact(x, z)))
      fail(1, "x=" + alg_.describe(x) + " y=" + alg_.describe(y) + " z=" + alg_.describe(z));
    // C3: symmetry
    if (cxy != alg_.contact(y, x)) fail(2, "x=" + alg_.describe(x) + " y=" + alg_.describe(y));
    // C4: x != 0 => C(x, x)
    if (!alg_.equal(x, zero) && !alg_.contact(x, x)) fail(3, "x=" + alg_.describe(x));
    // x <= x + z and y <= y + z
    if (cxy && !alg_.contact(alg_.join(x, z), alg_.join(y, z)))
      fail(4, "x=" + alg_.describe(x) + " y=" + alg_.describe(y) + " z=" + alg_.describe(z));
    if (!alg_.equal(alg_.meet(x, y), zero) && !cxy) fail(5, "x=" + alg_.describe(x) + " y=" + alg_.describe(y));
  }

  const AuditReport& report() const { return report_; }

private:
  void fail(std::size_t i, std::string witness) {
    auto& c = report_.checks[i];
    if (!c.passed) return;
    c.passed = false;
    c.witness = std::move(witness);
  }

  const A& alg_;
  AuditReport report_;
};

// Every triple of elements; needs at most 8 cells.
AuditReport audit_axioms(const FiniteContactAlgebra& alg);

// `samples` triples drawn from `gen` with an mt19937_64 seeded by `seed`.
template <ContactAlgebra A>
AuditReport audit_axioms(const A& alg, const std::function<typename A::Element(std::mt19937_64&)>& gen,
                         std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  AxiomAuditor<A> auditor(alg);
  for (std::size_t i = 0; i < samples; ++i) {
    auto x = gen(rng);
    auto y = gen(rng);
    auto z = gen(rng);
    auditor.visit(x, y, z);
  }
  return auditor.report();
}

// nullopt when connected, else an element other than 0 and 1 not in contact
// with its complement. Exhaustive; needs at most 20 cells.
std::optional<FiniteContactAlgebra::Element> connectedness_witness(const FiniteContactAlgebra& alg);
bool is_connected_algebra(const FiniteContactAlgebra& alg);

// Sampled version for polytope carriers.
template <ContactAlgebra A>
std::optional<typename A::Element> connectedness_witness(const A& alg,
                                                         const std::function<typename A::Element(std::mt19937_64&)>& gen,
                                                         std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    auto x = gen(rng);
    if (alg.equal(x, alg.zero()) || alg.equal(x, alg.one())) continue;
    if (!alg.contact(x, alg.complement(x))) return x;
  }
  return std::nullopt;
}

// --- merging ---------------------------------------------------------------

// Union of the images of the cells in `subset`.
template <ContactAlgebra A>
typename A::Element merged(const A& alg, const std::vector<typename A::Element>& images, std::uint64_t subset) {
  auto acc = alg.zero();
  for (std::size_t c = 0; c < images.size(); ++c)
    if (subset >> c & 1) acc = alg.join(acc, images[c]);
  return acc;
}

struct MergeReport {
  std::vector<AxiomCheck> checks;
  std::size_t subsets = 0;
  std::size_t pairs = 0;
  bool exhaustive = false;

  bool all_passed() const;
  const AxiomCheck& check(const std::string& name) const;
  std::string text() const;
};

template <class A>
concept PolytopeContactAlgebra = ContactAlgebra<A> && requires(const A& alg, const typename A::Element& x) {
  { alg.touches(x, x) } -> std::convertible_to<bool>;
};

// Checks the union map a -> U{images[c] : c in a} against the induced algebra of
// f: bottom and top, injectivity, complement, join, strong contact, and the
// topological-contact variant. Exhaustive over all subsets and subset pairs when
// f has at most 6 cells, otherwise `samples` random pairs from `seed`.
template <PolytopeContactAlgebra A>
MergeReport verify_merging(const A& alg, const AdjacencySpace& f, const std::vector<typename A::Element>& images,
                           std::size_t samples = 4096, std::uint64_t seed = 1) {
  if (images.size() != f.size()) throw std::invalid_argument("one image per cell expected");
  if (f.size() > 63) throw std::invalid_argument("merging supports at most 63 cells");
  FiniteContactAlgebra discrete(f);
  MergeReport report;
  for (const char* n : {"bottom-top", "injective", "complement", "join", "contact-SC", "contact-C"})
    report.checks.push_back({n, true, {}});
  auto fail = [&](std::size_t i, std::string witness) {
    auto& c = report.checks[i];
    if (!c.passed) return;
    c.passed = false;
    c.witness = std::move(witness);
  };
  auto show = [&](std::uint64_t a) { return discrete.describe(a); };

  const std::uint64_t full = discrete.one();
  if (!alg.equal(merged(alg, images, 0), alg.zero())) fail(0, "a={}");
  if (!alg.equal(merged(alg, images, full), alg.one())) fail(0, "a=" + show(full));

  auto check_pair = [&](std::uint64_t a, std::uint64_t b, const typename A::Element& ua,
                        const typename A::Element& ub, const typename A::Element& uab) {
    ++report.pairs;
    std::string w = "a=" + show(a) + " b=" + show(b);
    if (a != b && alg.equal(ua, ub)) fail(1, w);
    if (!alg.equal(uab, alg.join(ua, ub))) fail(3, w);
    bool cr = discrete.contact(a, b);
    if (cr != alg.contact(ua, ub)) fail(4, w);
    if (cr != alg.touches(ua, ub)) fail(5, w);
  };

  if (f.size() <= 6) {
    report.exhaustive = true;
    const std::uint64_t count = std::uint64_t{1} << f.size();
    std::vector<typename A::Element> u;
    for (std::uint64_t a = 0; a < count; ++a) u.push_back(merged(alg, images, a));
    report.subsets = count;
    for (std::uint64_t a = 0; a < count; ++a) {
      if (!alg.equal(u[full & ~a], alg.complement(u[a]))) fail(2, "a=" + show(a));
      for (std::uint64_t b = 0; b < count; ++b) check_pair(a, b, u[a], u[b], u[a | b]);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, full);
    for (std::size_t i = 0; i < samples; ++i) {
      std::uint64_t a = pick(rng), b = pick(rng);
      auto ua = merged(alg, images, a), ub = merged(alg, images, b);
      ++report.subsets;
      if (!alg.equal(merged(alg, images, full & ~a), alg.complement(ua))) fail(2, "a=" + show(a));
      check_pair(a, b, ua, ub, merged(alg, images, a | b));
    }
  }
  return report;
}

}  // namespace polycontact
