#pragma once

#include <polycontact/geometry.hpp>
#include <polycontact/interval_poly.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace polycontact {

// base x R^(dim-1).
class CylinderPolytope {
public:
  CylinderPolytope(IntervalPolytope base, int dim);

  static CylinderPolytope empty(int dim) { return {IntervalPolytope::empty(), dim}; }
  static CylinderPolytope all(int dim) { return {IntervalPolytope::all(), dim}; }

  const IntervalPolytope& base() const { return base_; }
  int dim() const { return dim_; }
  bool is_empty() const { return base_.is_empty(); }
  bool contains(const Point& p) const;

  bool operator==(const CylinderPolytope&) const = default;

private:
  IntervalPolytope base_;
  int dim_;
};

CylinderPolytope lift(const IntervalPolytope& p, int dim);

// Binary operations throw DimensionError when the ambient dimensions differ.
CylinderPolytope complement(const CylinderPolytope& p);
CylinderPolytope join(const CylinderPolytope& p, const CylinderPolytope& q);
CylinderPolytope reg_meet(const CylinderPolytope& p, const CylinderPolytope& q);
bool contact_C(const CylinderPolytope& p, const CylinderPolytope& q);
bool overlap(const CylinderPolytope& p, const CylinderPolytope& q);
bool contact_SC(const CylinderPolytope& p, const CylinderPolytope& q);

// The slab (centre - radius, centre + radius) x R^(dim-1).
struct SlabWitness {
  IntervalWitness base;
  int dim;
};
std::optional<SlabWitness> sc_witness(const CylinderPolytope& p, const CylinderPolytope& q);

// `cyl n=3 { [0,1]; [2,inf) }`
std::string to_string(const CylinderPolytope& p);
CylinderPolytope parse_cylinder_polytope(std::string_view text);

}  // namespace polycontact
