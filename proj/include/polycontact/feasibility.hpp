#pragma once

#include <polycontact/geometry.hpp>

#include <optional>
#include <vector>

namespace polycontact {

// a*x + b*y < c (strict) or <= c.
struct LinearConstraint2 {
  Rational a, b, c;
  bool strict = false;
};

LinearConstraint2 as_constraint(const HalfSpace& h, bool strict);

// Exact feasibility by Fourier-Motzkin elimination of y. Returns a point
// satisfying every constraint, or nullopt if none exists.
std::optional<Point> find_feasible_point(const std::vector<LinearConstraint2>& system);

// Point in the interior of the intersection of closed half-planes, if the
// intersection has nonempty interior.
std::optional<Point> strict_interior_point(const std::vector<HalfSpace>& hs);

// Closed intersection is nonempty.
bool closed_intersection_nonempty(const std::vector<HalfSpace>& hs);

}  // namespace polycontact
