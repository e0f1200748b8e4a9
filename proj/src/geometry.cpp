#include <polycontact/errors.hpp>
#include <polycontact/geometry.hpp>

#include <algorithm>

namespace polycontact {

namespace {

// Divides by |first nonzero| (half-spaces) or by the signed first nonzero (hyperplanes).
void canonicalize(std::vector<Rational>& normal, Rational& offset, bool keep_orientation) {
  for (auto& c : normal) c.canonicalize();
  offset.canonicalize();
  auto lead = std::find_if(normal.begin(), normal.end(), [](const Rational& c) { return c != 0; });
  if (lead == normal.end()) throw std::invalid_argument("constraint normal must be nonzero");
  Rational scale = keep_orientation ? Rational(abs(*lead)) : *lead;
  if (scale == 1) return;
  for (auto& c : normal) c /= scale;
  offset /= scale;
}

Rational dot(const std::vector<Rational>& a, const Point& p) {
  if (a.size() != p.dim())
    throw DimensionError("dimension mismatch: constraint in R^" + std::to_string(a.size()) + ", point in R^" +
                         std::to_string(p.dim()));
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * p[i];
  return acc;
}

bool less_than(const std::vector<Rational>& n1, const Rational& o1, const std::vector<Rational>& n2,
               const Rational& o2) {
  if (n1.size() != n2.size()) return n1.size() < n2.size();
  for (std::size_t i = 0; i < n1.size(); ++i)
    if (n1[i] != n2[i]) return n1[i] < n2[i];
  return o1 < o2;
}

std::string linear_text(const std::vector<Rational>& normal) {
  std::string out;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (i) out += ' ';
    out += to_string(normal[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(p[i]);
  }
  return out + ")";
}

HalfSpace::HalfSpace(std::vector<Rational> normal, Rational offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
  canonicalize(normal_, offset_, true);
}

Rational HalfSpace::slack(const Point& p) const { return dot(normal_, p) - offset_; }

Hyperplane HalfSpace::boundary() const { return Hyperplane(normal_, offset_); }

bool HalfSpace::operator<(const HalfSpace& other) const {
  return less_than(normal_, offset_, other.normal_, other.offset_);
}

Hyperplane::Hyperplane(std::vector<Rational> normal, Rational offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
  canonicalize(normal_, offset_, false);
}

HalfSpace Hyperplane::lower_side() const { return HalfSpace(normal_, offset_); }

HalfSpace Hyperplane::upper_side() const { return flip(lower_side()); }

bool Hyperplane::contains(const Point& p) const { return dot(normal_, p) == offset_; }

bool Hyperplane::operator<(const Hyperplane& other) const {
  return less_than(normal_, offset_, other.normal_, other.offset_);
}

std::string to_string(const HalfSpace& h) { return linear_text(h.normal()) + " <= " + to_string(h.offset()); }

std::string to_string(const Hyperplane& h) { return linear_text(h.normal()) + " = " + to_string(h.offset()); }

Side side_of(const HalfSpace& h, const Point& p) {
  int s = sgn(h.slack(p));
  if (s < 0) return Side::Interior;
  if (s == 0) return Side::Boundary;
  return Side::Exterior;
}

HalfSpace flip(const HalfSpace& h) {
  std::vector<Rational> normal;
  normal.reserve(h.dim());
  for (const auto& c : h.normal()) normal.emplace_back(-c);
  return HalfSpace(std::move(normal), -h.offset());
}

HalfSpace scaled(const HalfSpace& h, const Rational& q) {
  if (q <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Rational> normal;
  for (const auto& c : h.normal()) normal.emplace_back(c * q);
  return HalfSpace(std::move(normal), h.offset() * q);
}

LineIntersection intersect_lines(const Hyperplane& l1, const Hyperplane& l2) {
  if (l1.dim() != 2 || l2.dim() != 2) throw DimensionError("intersect_lines is defined for lines in R^2 only");
  const auto& n1 = l1.normal();
  const auto& n2 = l2.normal();
  Rational det = n1[0] * n2[1] - n1[1] * n2[0];
  if (det == 0) {
    if (l1 == l2) return {LineIntersection::Kind::Coincident, std::nullopt};
    return {LineIntersection::Kind::Empty, std::nullopt};
  }
  Rational x = (l1.offset() * n2[1] - n1[1] * l2.offset()) / det;
  Rational y = (n1[0] * l2.offset() - l1.offset() * n2[0]) / det;
  return {LineIntersection::Kind::Point, Point{x, y}};
}

Point LineParam::at(const Rational& t) const { return Point{base[0] + t * dx, base[1] + t * dy}; }

LineParam parametrize(const Hyperplane& line) {
  if (line.dim() != 2) throw DimensionError("parametrize expects a line in R^2");
  const auto& n = line.normal();
  Point base = n[0] != 0 ? Point{line.offset() / n[0], Rational(0)} : Point{Rational(0), line.offset() / n[1]};
  return {std::move(base), -n[1], n[0]};
}

std::optional<Rational> crossing_param(const LineParam& line, const Hyperplane& other) {
  const auto& n = other.normal();
  Rational rate = n[0] * line.dx + n[1] * line.dy;
  if (rate == 0) return std::nullopt;
  return (other.offset() - n[0] * line.base[0] - n[1] * line.base[1]) / rate;
}

std::vector<Rational> piece_samples(const std::vector<Rational>& breakpoints) {
  if (breakpoints.empty()) return {Rational(0)};
  std::vector<Rational> out;
  out.reserve(breakpoints.size() + 1);
  out.emplace_back(breakpoints.front() - 1);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) out.emplace_back((breakpoints[i] + breakpoints[i + 1]) / 2);
  out.emplace_back(breakpoints.back() + 1);
  return out;
}

}  // namespace polycontact
