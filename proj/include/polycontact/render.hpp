#pragma once

#include <polycontact/interval_poly.hpp>
#include <polycontact/plane_poly.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polycontact {

struct Viewport {
  Rational xmin, ymin, xmax, ymax;
};

// Vertices of b cut down to the viewport, counterclockwise from the lowest
// then leftmost one. Empty when the two meet in less than a region.
std::vector<Point> clipped_polygon(const BasicPolytope& b, const Viewport& view);

using PlaneLayer = std::pair<std::string, PlanePolytope>;
std::string render_plane_svg(const std::vector<PlaneLayer>& layers, const Viewport& view,
                             const std::optional<DiskWitness>& disk = std::nullopt);

// One row per polytope on a number line over [lo, hi]; rays run to the edge.
using LineRow = std::pair<std::string, IntervalPolytope>;
std::string render_line_svg(const std::vector<LineRow>& rows, const Rational& lo, const Rational& hi);

}  // namespace polycontact
