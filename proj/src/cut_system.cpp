#include <polycontact/cut_system.hpp>
#include <polycontact/errors.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polycontact {

namespace {

bool point_less(const Point& a, const Point& b) { return a.coords() < b.coords(); }

std::vector<Rational> breakpoints_on(const std::vector<Hyperplane>& cuts, std::size_t i, const LineParam& param) {
  std::vector<Rational> out;
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    if (j == i) continue;
    if (auto t = crossing_param(param, cuts[j])) out.push_back(std::move(*t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Alternative alternative_near(const CutSystem& cs, const Point& p, std::size_t carrier, bool upper) {
  Alternative alt(cs.cuts().size());
  for (std::size_t j = 0; j < cs.cuts().size(); ++j) {
    if (j == carrier) {
      alt[j] = upper;
      continue;
    }
    const auto& cut = cs.cuts()[j];
    alt[j] = cut.normal()[0] * p[0] + cut.normal()[1] * p[1] > cut.offset();
  }
  return alt;
}

}  // namespace

CutSystem::CutSystem(std::vector<Hyperplane> cuts) {
  for (const auto& c : cuts)
    if (c.dim() != 2) throw DimensionError("cut systems are planar");
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts_ = std::move(cuts);
  for (std::size_t i = 0; i < cuts_.size(); ++i)
    for (std::size_t j = i + 1; j < cuts_.size(); ++j) {
      auto hit = intersect_lines(cuts_[i], cuts_[j]);
      if (hit.kind == LineIntersection::Kind::Point) vertices_.push_back(*hit.point);
    }
  std::sort(vertices_.begin(), vertices_.end(), point_less);
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

std::vector<HalfSpace> CutSystem::sides() const {
  std::vector<HalfSpace> out;
  for (const auto& c : cuts_) {
    out.push_back(c.lower_side());
    out.push_back(c.upper_side());
  }
  return out;
}

std::optional<std::size_t> CutSystem::find(const Hyperplane& line) const {
  auto it = std::lower_bound(cuts_.begin(), cuts_.end(), line);
  if (it == cuts_.end() || !(*it == line)) return std::nullopt;
  return static_cast<std::size_t>(it - cuts_.begin());
}

std::vector<Brick> brick_decomposition(const CutSystem& cs) {
  struct Partial {
    Alternative alt;
    std::vector<HalfSpace> hs;
  };
  std::vector<Partial> acc{{}};
  for (const auto& cut : cs.cuts()) {
    std::vector<Partial> next;
    for (const auto& part : acc)
      for (bool upper : {false, true}) {
        Partial grown = part;
        grown.alt.push_back(upper);
        grown.hs.push_back(upper ? cut.upper_side() : cut.lower_side());
        if (mk_basic(grown.hs)) next.push_back(std::move(grown));
      }
    acc = std::move(next);
  }
  std::vector<Brick> bricks;
  for (auto& part : acc) bricks.push_back(Brick{std::move(part.alt), *mk_basic(std::move(part.hs))});
  return bricks;
}

std::vector<std::size_t> bricks_in_block(const std::vector<Brick>& bricks, const SideChoice& admissible) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    bool extends = std::all_of(admissible.begin(), admissible.end(), [&](const auto& choice) {
      return bricks[i].alternative.at(choice.first) == choice.second;
    });
    if (extends) out.push_back(i);
  }
  return out;
}

bool Sheet::contains(const CutSystem& cs, const Point& p) const {
  const auto& line = cs.cuts()[carrier];
  if (!line.contains(p)) return false;
  auto param = parametrize(line);
  // Recover t from whichever direction coordinate is nonzero.
  Rational t = param.dx != 0 ? Rational((p[0] - param.base[0]) / param.dx) : Rational((p[1] - param.base[1]) / param.dy);
  if (lo && t <= *lo) return false;
  if (hi && t >= *hi) return false;
  return true;
}

std::vector<Sheet> sheets(const CutSystem& cs) {
  std::vector<Sheet> out;
  for (std::size_t i = 0; i < cs.cuts().size(); ++i) {
    auto param = parametrize(cs.cuts()[i]);
    auto breaks = breakpoints_on(cs.cuts(), i, param);
    auto samples = piece_samples(breaks);
    for (std::size_t k = 0; k < samples.size(); ++k) {
      Sheet s{i, std::nullopt, std::nullopt, param.at(samples[k])};
      if (k > 0) s.lo = breaks[k - 1];
      if (k < breaks.size()) s.hi = breaks[k];
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::pair<Alternative, Alternative> toasts(const CutSystem& cs, const Sheet& s) {
  return {alternative_near(cs, s.sample, s.carrier, false), alternative_near(cs, s.sample, s.carrier, true)};
}

SheetPlacement classify_sheet(const CutSystem& cs, const std::vector<Brick>& bricks, const Sheet& s,
                              const PlanePolytope& p) {
  for (const auto& line : p.constraint_lines())
    if (!cs.find(line)) throw std::invalid_argument("polytope has a constraint line outside the cut system");
  std::map<Alternative, bool> inside;
  for (const auto& b : bricks) inside[b.alternative] = p.contains(b.region.interior_point());
  auto [below, above] = toasts(cs, s);
  bool in_below = inside.at(below);
  bool in_above = inside.at(above);
  if (in_below && in_above) return SheetPlacement::Interior;
  if (!in_below && !in_above) return SheetPlacement::Exterior;
  return SheetPlacement::Boundary;
}

BoundaryRepresentation boundary_representation(const PlanePolytope& p) {
  BoundaryRepresentation rep{CutSystem(p.constraint_lines()), {}, {}};
  const auto& cs = rep.cut_system;
  auto bricks = brick_decomposition(cs);
  for (auto& s : sheets(cs))
    if (classify_sheet(cs, bricks, s, p) == SheetPlacement::Boundary) rep.sheets.push_back(std::move(s));
  for (const auto& v : cs.vertices())
    if (p.contains(v) && !p.interior_contains(v)) rep.corners.push_back(v);
  return rep;
}

}  // namespace polycontact
