#pragma once

#include <polycontact/plane_poly.hpp>

#include <optional>
#include <vector>

namespace polycontact {

// A finite set of distinct planar lines together with the half-planes and
// vertices they determine.
class CutSystem {
public:
  explicit CutSystem(std::vector<Hyperplane> cuts);

  const std::vector<Hyperplane>& cuts() const { return cuts_; }
  // For cut i, entries 2i and 2i+1 are its lower and upper closed sides.
  std::vector<HalfSpace> sides() const;
  // Pairwise intersection points of the cuts, sorted and deduplicated.
  const std::vector<Point>& vertices() const { return vertices_; }
  // Index of a cut, or nullopt.
  std::optional<std::size_t> find(const Hyperplane& line) const;

private:
  std::vector<Hyperplane> cuts_;
  std::vector<Point> vertices_;
};

// upper[i] picks the side of cut i: false for {n.x <= c}, true for {n.x >= c}.
using Alternative = std::vector<bool>;

struct Brick {
  Alternative alternative;
  BasicPolytope region;
};

// Alternatives whose intersection has nonempty interior, in lexicographic order.
std::vector<Brick> brick_decomposition(const CutSystem& cs);

// A partial choice of sides (cut index, upper?).
using SideChoice = std::vector<std::pair<std::size_t, bool>>;
// Indices of bricks whose alternatives extend the given choice.
std::vector<std::size_t> bricks_in_block(const std::vector<Brick>& bricks, const SideChoice& admissible);

// Relatively open piece of cut `carrier` between consecutive vertices, as a
// parameter range on parametrize(carrier); nullopt ends are unbounded.
struct Sheet {
  std::size_t carrier;
  std::optional<Rational> lo, hi;
  Point sample;

  bool contains(const CutSystem& cs, const Point& p) const;
};

std::vector<Sheet> sheets(const CutSystem& cs);

// Alternatives of the bricks just below and just above the sheet.
std::pair<Alternative, Alternative> toasts(const CutSystem& cs, const Sheet& s);

enum class SheetPlacement { Boundary, Interior, Exterior };

// p must be built over the cut system (every constraint line of p is a cut).
SheetPlacement classify_sheet(const CutSystem& cs, const std::vector<Brick>& bricks, const Sheet& s,
                              const PlanePolytope& p);

struct BoundaryRepresentation {
  CutSystem cut_system;
  std::vector<Sheet> sheets;  // sheets contained in the boundary
  std::vector<Point> corners;  // vertices on the boundary
};

BoundaryRepresentation boundary_representation(const PlanePolytope& p);

}  // namespace polycontact
