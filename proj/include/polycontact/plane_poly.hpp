#pragma once

#include <polycontact/geometry.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycontact {

// Regularized intersection of finitely many closed half-planes, stored only when
// its interior is nonempty (then it equals the plain intersection). Constraints
// are canonical, sorted, and irredundant.
class BasicPolytope {
public:
  static BasicPolytope whole_plane();

  const std::vector<HalfSpace>& constraints() const { return constraints_; }
  // A point of the interior, found while deciding nonemptiness.
  const Point& interior_point() const { return interior_point_; }

  bool contains(const Point& p) const;
  bool interior_contains(const Point& p) const;
  // Whether p + e*dir lies in the set for all sufficiently small e > 0.
  bool contains_near(const Point& p, const Rational& dx, const Rational& dy) const;

  bool operator==(const BasicPolytope& other) const { return constraints_ == other.constraints_; }
  bool operator<(const BasicPolytope& other) const { return constraints_ < other.constraints_; }

private:
  friend std::optional<BasicPolytope> mk_basic(std::vector<HalfSpace> hs);
  BasicPolytope(std::vector<HalfSpace> constraints, Point interior)
      : constraints_(std::move(constraints)), interior_point_(std::move(interior)) {}

  std::vector<HalfSpace> constraints_;
  Point interior_point_;
};

// nullopt iff the intersection has empty interior. Redundant constraints are dropped.
std::optional<BasicPolytope> mk_basic(std::vector<HalfSpace> hs);

// Finite union of basic polytopes. Equality is semantic; see equals().
class PlanePolytope {
public:
  PlanePolytope() = default;  // empty set
  explicit PlanePolytope(std::vector<BasicPolytope> parts);

  static PlanePolytope empty() { return {}; }
  static PlanePolytope all();
  // Builds the union of mk_basic(hs) over the given constraint lists; empty ones vanish.
  static PlanePolytope from_constraints(const std::vector<std::vector<HalfSpace>>& basics);

  const std::vector<BasicPolytope>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }

  bool contains(const Point& p) const;
  bool interior_contains(const Point& p) const;
  bool contains_near(const Point& p, const Rational& dx, const Rational& dy) const;
  // Every constraint line of every part (canonical, deduplicated, sorted).
  std::vector<Hyperplane> constraint_lines() const;

private:
  std::vector<BasicPolytope> parts_;
};

PlanePolytope complement(const PlanePolytope& p);
PlanePolytope join(const PlanePolytope& p, const PlanePolytope& q);
PlanePolytope reg_meet(const PlanePolytope& p, const PlanePolytope& q);
// reg_meet(p, complement(q)), expanded part by part.
PlanePolytope difference(const PlanePolytope& p, const PlanePolytope& q);

bool is_empty(const PlanePolytope& p);
bool equals(const PlanePolytope& p, const PlanePolytope& q);

bool contact_C(const PlanePolytope& p, const PlanePolytope& q);
bool overlap(const PlanePolytope& p, const PlanePolytope& q);
bool contact_SC(const PlanePolytope& p, const PlanePolytope& q);

// Open disk inside p u q meeting both.
struct DiskWitness {
  Point centre;
  Rational radius;
};
std::optional<DiskWitness> sc_witness(const PlanePolytope& p, const PlanePolytope& q);

// `poly { basic { 1 0 <= 1; -1 0 <= 0; } basic { ... } }`
std::string to_string(const PlanePolytope& p);
PlanePolytope parse_plane_polytope(std::string_view text);

}  // namespace polycontact
