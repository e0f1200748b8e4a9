#pragma once

#include <polycontact/rational.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycontact {

// Closed piece of the line. A missing bound is infinite.
struct IntervalPiece {
  std::optional<Rational> lo;  // nullopt = -inf
  std::optional<Rational> hi;  // nullopt = +inf

  bool operator==(const IntervalPiece&) const = default;
};

// Regular closed subset of R^1 that is a finite union of nondegenerate closed
// intervals and rays. Pieces are sorted, pairwise separated by gaps of positive
// length, and never single points.
class IntervalPolytope {
public:
  IntervalPolytope() = default;  // empty set

  static IntervalPolytope canonicalize(std::vector<IntervalPiece> raw);
  static IntervalPolytope empty() { return {}; }
  static IntervalPolytope all();
  static IntervalPolytope interval(Rational lo, Rational hi);

  const std::vector<IntervalPiece>& pieces() const { return pieces_; }
  bool is_empty() const { return pieces_.empty(); }
  bool is_all() const;
  bool contains(const Rational& x) const;
  bool interior_contains(const Rational& x) const;

  bool operator==(const IntervalPolytope&) const = default;

private:
  std::vector<IntervalPiece> pieces_;
};

IntervalPolytope complement(const IntervalPolytope& p);
IntervalPolytope join(const IntervalPolytope& p, const IntervalPolytope& q);
IntervalPolytope reg_meet(const IntervalPolytope& p, const IntervalPolytope& q);

// p and q share at least one point.
bool contact_C(const IntervalPolytope& p, const IntervalPolytope& q);
// Regularized meet is nonempty.
bool overlap(const IntervalPolytope& p, const IntervalPolytope& q);
// On the line strong contact and topological contact coincide for polytopes.
bool contact_SC(const IntervalPolytope& p, const IntervalPolytope& q);

// Open interval (centre - radius, centre + radius) inside p u q meeting both,
// or nullopt when there is no strong contact.
struct IntervalWitness {
  Rational centre;
  Rational radius;
};
std::optional<IntervalWitness> sc_witness(const IntervalPolytope& p, const IntervalPolytope& q);

// `(-inf,0]; [1/2,3]; [5,inf)`, `empty`, `all`.
std::string to_string(const IntervalPolytope& p);
IntervalPolytope parse_interval_polytope(std::string_view text);

}  // namespace polycontact
