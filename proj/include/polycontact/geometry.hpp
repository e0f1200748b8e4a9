#pragma once

#include <polycontact/rational.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace polycontact {

class Point {
public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) { reduce(); }
  Point(std::initializer_list<Rational> coords) : coords_(coords) { reduce(); }

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool operator==(const Point& other) const = default;

private:
  void reduce() {
    for (auto& c : coords_) c.canonicalize();
  }

  std::vector<Rational> coords_;
};

std::string to_string(const Point& p);

enum class Side { Interior, Boundary, Exterior };

class Hyperplane;

// Closed half-space {x | normal . x <= offset}. The stored form is scaled so the
// first nonzero normal coordinate has absolute value 1.
class HalfSpace {
public:
  HalfSpace(std::vector<Rational> normal, Rational offset);

  std::size_t dim() const { return normal_.size(); }
  const std::vector<Rational>& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }

  // normal . p - offset
  Rational slack(const Point& p) const;
  Hyperplane boundary() const;

  bool operator==(const HalfSpace& other) const = default;
  bool operator<(const HalfSpace& other) const;

private:
  std::vector<Rational> normal_;
  Rational offset_;
};

// {x | normal . x = offset}, scaled so the first nonzero normal coordinate is +1.
class Hyperplane {
public:
  Hyperplane(std::vector<Rational> normal, Rational offset);

  std::size_t dim() const { return normal_.size(); }
  const std::vector<Rational>& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }

  // The two closed sides: {normal.x <= offset} and {normal.x >= offset}.
  HalfSpace lower_side() const;
  HalfSpace upper_side() const;
  bool contains(const Point& p) const;

  bool operator==(const Hyperplane& other) const = default;
  bool operator<(const Hyperplane& other) const;

private:
  std::vector<Rational> normal_;
  Rational offset_;
};

std::string to_string(const HalfSpace& h);
std::string to_string(const Hyperplane& h);

Side side_of(const HalfSpace& h, const Point& p);
HalfSpace flip(const HalfSpace& h);
// Multiplies both sides by q > 0 before canonicalizing; used to check scale invariance.
HalfSpace scaled(const HalfSpace& h, const Rational& q);

struct LineIntersection {
  enum class Kind { Empty, Point, Coincident } kind;
  std::optional<Point> point;
};

// Planar lines only.
LineIntersection intersect_lines(const Hyperplane& l1, const Hyperplane& l2);

// Planar line as base + t * (dx, dy), with (dx, dy) = (-b, a) for the line a x + b y = c.
struct LineParam {
  Point base;
  Rational dx, dy;

  Point at(const Rational& t) const;
};

LineParam parametrize(const Hyperplane& line);
// Parameter where `other` crosses the line, nullopt if parallel.
std::optional<Rational> crossing_param(const LineParam& line, const Hyperplane& other);
// One parameter inside each open piece cut out by the sorted, distinct breakpoints.
std::vector<Rational> piece_samples(const std::vector<Rational>& breakpoints);

}  // namespace polycontact
