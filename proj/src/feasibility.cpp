#include <polycontact/errors.hpp>
#include <polycontact/feasibility.hpp>

namespace polycontact {

namespace {

// Lower/upper bounds on a single variable; nullopt value = unbounded.
struct Bound {
  std::optional<Rational> value;
  bool strict = false;
};

void tighten_lower(Bound& b, const Rational& v, bool strict) {
  if (!b.value || v > *b.value || (v == *b.value && strict)) {
    b.value = v;
    b.strict = strict;
  }
}

void tighten_upper(Bound& b, const Rational& v, bool strict) {
  if (!b.value || v < *b.value || (v == *b.value && strict)) {
    b.value = v;
    b.strict = strict;
  }
}

// Picks a value inside (lo, hi) honouring strictness, or nullopt if the range is empty.
std::optional<Rational> pick_between(const Bound& lo, const Bound& hi) {
  if (lo.value && hi.value) {
    if (*lo.value < *hi.value) return Rational((*lo.value + *hi.value) / 2);
    if (*lo.value == *hi.value && !lo.strict && !hi.strict) return *lo.value;
    return std::nullopt;
  }
  if (lo.value) return Rational(*lo.value + 1);
  if (hi.value) return Rational(*hi.value - 1);
  return Rational(0);
}

// Adds k*x (<|<=) d to the bounds on x. Returns false if it is a violated constant constraint.
bool add_1d(Bound& lo, Bound& hi, const Rational& k, const Rational& d, bool strict) {
  if (k == 0) return strict ? 0 < d : 0 <= d;
  Rational v = d / k;
  if (k > 0)
    tighten_upper(hi, v, strict);
  else
    tighten_lower(lo, v, strict);
  return true;
}

}  // namespace

LinearConstraint2 as_constraint(const HalfSpace& h, bool strict) {
  if (h.dim() != 2) throw DimensionError("planar constraint expected, got R^" + std::to_string(h.dim()));
  return {h.normal()[0], h.normal()[1], h.offset(), strict};
}

std::optional<Point> find_feasible_point(const std::vector<LinearConstraint2>& system) {
  // Constraints with b != 0 become y (<|>) p + q*x.
  struct Slope {
    Rational p, q;
    bool strict;
  };
  std::vector<Slope> uppers, lowers;
  Bound xlo, xhi;
  for (const auto& c : system) {
    if (c.b == 0) {
      if (!add_1d(xlo, xhi, c.a, c.c, c.strict)) return std::nullopt;
      continue;
    }
    Slope s{c.c / c.b, -c.a / c.b, c.strict};
    (c.b > 0 ? uppers : lowers).push_back(std::move(s));
  }
  // lower(x) (<) upper(x)  <=>  (qL - qU) x (<) pU - pL
  for (const auto& l : lowers)
    for (const auto& u : uppers)
      if (!add_1d(xlo, xhi, l.q - u.q, u.p - l.p, l.strict || u.strict)) return std::nullopt;
  auto x = pick_between(xlo, xhi);
  if (!x) return std::nullopt;

  Bound ylo, yhi;
  for (const auto& u : uppers) tighten_upper(yhi, u.p + u.q * *x, u.strict);
  for (const auto& l : lowers) tighten_lower(ylo, l.p + l.q * *x, l.strict);
  auto y = pick_between(ylo, yhi);
  if (!y) throw VerificationError("Fourier-Motzkin back-substitution found no y");
  return Point{*x, *y};
}

std::optional<Point> strict_interior_point(const std::vector<HalfSpace>& hs) {
  std::vector<LinearConstraint2> system;
  system.reserve(hs.size());
  for (const auto& h : hs) system.push_back(as_constraint(h, true));
  return find_feasible_point(system);
}

bool closed_intersection_nonempty(const std::vector<HalfSpace>& hs) {
  std::vector<LinearConstraint2> system;
  system.reserve(hs.size());
  for (const auto& h : hs) system.push_back(as_constraint(h, false));
  return find_feasible_point(system).has_value();
}

}  // namespace polycontact
