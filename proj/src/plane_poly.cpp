#include <polycontact/errors.hpp>
#include <polycontact/feasibility.hpp>
#include <polycontact/plane_poly.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace polycontact {

namespace {

void require_planar(const HalfSpace& h) {
  if (h.dim() != 2) throw DimensionError("plane polytopes take constraints in R^2, got R^" + std::to_string(h.dim()));
}

Rational l1_norm(const HalfSpace& h) { return abs(h.normal()[0]) + abs(h.normal()[1]); }

struct Direction {
  Rational x, y;
};

bool upper_half(const Direction& d) { return d.y > 0 || (d.y == 0 && d.x > 0); }

Rational cross(const Direction& a, const Direction& b) { return a.x * b.y - a.y * b.x; }

// Directions strictly inside each angular sector around a point cut by the given lines.
std::vector<Direction> sector_directions(const std::vector<Hyperplane>& through) {
  if (through.empty()) return {};
  std::vector<Direction> rays;
  for (const auto& l : through) {
    rays.push_back({-l.normal()[1], l.normal()[0]});
    rays.push_back({l.normal()[1], -l.normal()[0]});
  }
  std::sort(rays.begin(), rays.end(), [](const Direction& a, const Direction& b) {
    bool ha = upper_half(a), hb = upper_half(b);
    if (ha != hb) return ha;
    return cross(a, b) > 0;
  });
  std::vector<Direction> out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& a = rays[i];
    const auto& b = rays[(i + 1) % rays.size()];
    if (cross(a, b) > 0)
      out.push_back({a.x + b.x, a.y + b.y});
    else  // a single line through the point: the two sides are a half-turn apart
      out.push_back({-a.y, a.x});
  }
  return out;
}

std::vector<Hyperplane> lines_through(const std::vector<Hyperplane>& lines, const Point& p) {
  std::vector<Hyperplane> out;
  for (const auto& l : lines)
    if (l.contains(p)) out.push_back(l);
  return out;
}

std::vector<Hyperplane> pooled_lines(const PlanePolytope& p, const PlanePolytope& q) {
  auto lines = p.constraint_lines();
  auto more = q.constraint_lines();
  lines.insert(lines.end(), more.begin(), more.end());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

// A point on a constraint line with Int(p) on one side and Int(q) on the other,
// away from every other pooled line.
struct CrossingFacet {
  Point centre;
  std::size_t line;
};

std::optional<CrossingFacet> find_crossing_facet(const PlanePolytope& p, const PlanePolytope& q,
                                                 const std::vector<Hyperplane>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& mu = lines[i];
    auto param = parametrize(mu);
    std::vector<Rational> breaks;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j == i) continue;
      if (auto t = crossing_param(param, lines[j])) breaks.push_back(std::move(*t));
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    const Rational& nx = mu.normal()[0];
    const Rational& ny = mu.normal()[1];
    for (const auto& t : piece_samples(breaks)) {
      Point s = param.at(t);
      bool p_plus = p.contains_near(s, nx, ny);
      bool p_minus = p.contains_near(s, -nx, -ny);
      bool q_plus = q.contains_near(s, nx, ny);
      bool q_minus = q.contains_near(s, -nx, -ny);
      if ((p_plus && q_minus) || (p_minus && q_plus)) return CrossingFacet{std::move(s), i};
    }
  }
  return std::nullopt;
}

// Half the smallest L1-normalised slack: a disk of this radius stays clear of every listed line.
Rational clearance(const Point& centre, const std::vector<HalfSpace>& constraints, std::size_t skip) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (i == skip) continue;
    Rational d = abs(constraints[i].slack(centre)) / l1_norm(constraints[i]);
    if (!best || d < *best) best = d;
  }
  return best ? Rational(*best / 2) : Rational(1);
}

std::vector<BasicPolytope> dedupe(std::vector<BasicPolytope> parts) {
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return parts;
}

// start ⊓ q*, via the expansion q* = ⊓_i (∪_j flip(q_ij)).
std::vector<BasicPolytope> meet_with_complement(const BasicPolytope& start, const PlanePolytope& q) {
  std::vector<BasicPolytope> acc{start};
  for (const auto& part : q.parts()) {
    std::vector<BasicPolytope> next;
    for (const auto& region : acc)
      for (const auto& h : part.constraints()) {
        auto hs = region.constraints();
        hs.push_back(flip(h));
        if (auto b = mk_basic(std::move(hs))) next.push_back(std::move(*b));
      }
    acc = dedupe(std::move(next));
    if (acc.empty()) break;
  }
  return acc;
}

}  // namespace

// --- BasicPolytope ---------------------------------------------------------

BasicPolytope BasicPolytope::whole_plane() { return BasicPolytope({}, Point{Rational(0), Rational(0)}); }

bool BasicPolytope::contains(const Point& p) const {
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const HalfSpace& h) { return h.slack(p) <= 0; });
}

bool BasicPolytope::interior_contains(const Point& p) const {
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const HalfSpace& h) { return h.slack(p) < 0; });
}

bool BasicPolytope::contains_near(const Point& p, const Rational& dx, const Rational& dy) const {
  for (const auto& h : constraints_) {
    int s = sgn(h.slack(p));
    if (s > 0) return false;
    if (s == 0 && h.normal()[0] * dx + h.normal()[1] * dy > 0) return false;
  }
  return true;
}

std::optional<BasicPolytope> mk_basic(std::vector<HalfSpace> hs) {
  for (const auto& h : hs) require_planar(h);
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  auto interior = strict_interior_point(hs);
  if (!interior) return std::nullopt;
  // h is redundant iff the others leave no interior on its far side.
  for (std::size_t i = 0; i < hs.size();) {
    std::vector<HalfSpace> probe;
    probe.reserve(hs.size());
    for (std::size_t j = 0; j < hs.size(); ++j)
      if (j != i) probe.push_back(hs[j]);
    probe.push_back(flip(hs[i]));
    if (!strict_interior_point(probe))
      hs.erase(hs.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return BasicPolytope(std::move(hs), std::move(*interior));
}

// --- PlanePolytope ---------------------------------------------------------

PlanePolytope::PlanePolytope(std::vector<BasicPolytope> parts) : parts_(dedupe(std::move(parts))) {}

PlanePolytope PlanePolytope::all() { return PlanePolytope({BasicPolytope::whole_plane()}); }

PlanePolytope PlanePolytope::from_constraints(const std::vector<std::vector<HalfSpace>>& basics) {
  std::vector<BasicPolytope> parts;
  for (const auto& hs : basics)
    if (auto b = mk_basic(hs)) parts.push_back(std::move(*b));
  return PlanePolytope(std::move(parts));
}

bool PlanePolytope::contains(const Point& p) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const BasicPolytope& b) { return b.contains(p); });
}

bool PlanePolytope::contains_near(const Point& p, const Rational& dx, const Rational& dy) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const BasicPolytope& b) { return b.contains_near(p, dx, dy); });
}

bool PlanePolytope::interior_contains(const Point& p) const {
  auto through = lines_through(constraint_lines(), p);
  if (through.empty()) return contains(p);
  for (const auto& d : sector_directions(through))
    if (!contains_near(p, d.x, d.y)) return false;
  return true;
}

std::vector<Hyperplane> PlanePolytope::constraint_lines() const {
  std::vector<Hyperplane> lines;
  for (const auto& part : parts_)
    for (const auto& h : part.constraints()) lines.push_back(h.boundary());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

PlanePolytope complement(const PlanePolytope& p) {
  return PlanePolytope(meet_with_complement(BasicPolytope::whole_plane(), p));
}

PlanePolytope join(const PlanePolytope& p, const PlanePolytope& q) {
  auto parts = p.parts();
  parts.insert(parts.end(), q.parts().begin(), q.parts().end());
  return PlanePolytope(std::move(parts));
}

PlanePolytope reg_meet(const PlanePolytope& p, const PlanePolytope& q) {
  std::vector<BasicPolytope> parts;
  for (const auto& a : p.parts())
    for (const auto& b : q.parts()) {
      auto hs = a.constraints();
      hs.insert(hs.end(), b.constraints().begin(), b.constraints().end());
      if (auto m = mk_basic(std::move(hs))) parts.push_back(std::move(*m));
    }
  return PlanePolytope(std::move(parts));
}

PlanePolytope difference(const PlanePolytope& p, const PlanePolytope& q) {
  std::vector<BasicPolytope> parts;
  for (const auto& a : p.parts()) {
    auto piece = meet_with_complement(a, q);
    parts.insert(parts.end(), piece.begin(), piece.end());
  }
  return PlanePolytope(std::move(parts));
}

bool is_empty(const PlanePolytope& p) { return p.is_empty(); }

bool equals(const PlanePolytope& p, const PlanePolytope& q) {
  return difference(p, q).is_empty() && difference(q, p).is_empty();
}

bool contact_C(const PlanePolytope& p, const PlanePolytope& q) {
  for (const auto& a : p.parts())
    for (const auto& b : q.parts()) {
      auto hs = a.constraints();
      hs.insert(hs.end(), b.constraints().begin(), b.constraints().end());
      if (closed_intersection_nonempty(hs)) return true;
    }
  return false;
}

bool overlap(const PlanePolytope& p, const PlanePolytope& q) {
  for (const auto& a : p.parts())
    for (const auto& b : q.parts()) {
      auto hs = a.constraints();
      hs.insert(hs.end(), b.constraints().begin(), b.constraints().end());
      if (strict_interior_point(hs)) return true;
    }
  return false;
}

bool contact_SC(const PlanePolytope& p, const PlanePolytope& q) {
  if (p.is_empty() || q.is_empty()) return false;
  if (overlap(p, q)) return true;
  return find_crossing_facet(p, q, pooled_lines(p, q)).has_value();
}

std::optional<DiskWitness> sc_witness(const PlanePolytope& p, const PlanePolytope& q) {
  if (p.is_empty() || q.is_empty()) return std::nullopt;
  for (const auto& a : p.parts())
    for (const auto& b : q.parts()) {
      auto hs = a.constraints();
      hs.insert(hs.end(), b.constraints().begin(), b.constraints().end());
      if (auto m = mk_basic(std::move(hs))) {
        Point centre = m->interior_point();
        Rational r = clearance(centre, m->constraints(), m->constraints().size());
        return DiskWitness{std::move(centre), std::move(r)};
      }
    }
  auto lines = pooled_lines(p, q);
  auto facet = find_crossing_facet(p, q, lines);
  if (!facet) return std::nullopt;
  std::vector<HalfSpace> sides;
  for (const auto& l : lines) sides.push_back(l.lower_side());
  Rational r = clearance(facet->centre, sides, facet->line);
  return DiskWitness{std::move(facet->centre), std::move(r)};
}

// --- text form -------------------------------------------------------------

std::string to_string(const PlanePolytope& p) {
  std::string out = "poly {";
  for (const auto& part : p.parts()) {
    out += " basic {";
    for (const auto& h : part.constraints())
      out += " " + to_string(h.normal()[0]) + " " + to_string(h.normal()[1]) + " <= " + to_string(h.offset()) + ";";
    out += " }";
  }
  return out + " }";
}

namespace {

class PolyReader {
public:
  explicit PolyReader(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }
  bool try_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  Rational number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                   text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    if (start == pos_) fail("expected a rational");
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw e.shifted(start);
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PlanePolytope parse_plane_polytope(std::string_view text) {
  PolyReader in(text);
  in.expect("poly");
  in.expect("{");
  std::vector<std::vector<HalfSpace>> basics;
  while (!in.peek('}')) {
    in.expect("basic");
    in.expect("{");
    std::vector<HalfSpace> hs;
    while (!in.peek('}')) {
      Rational a = in.number();
      Rational b = in.number();
      in.expect("<=");
      Rational c = in.number();
      in.expect(";");
      if (a == 0 && b == 0) in.fail("constraint normal must be nonzero");
      hs.emplace_back(std::vector<Rational>{a, b}, c);
    }
    in.expect("}");
    basics.push_back(std::move(hs));
  }
  in.expect("}");
  if (!in.at_end()) in.fail("trailing input");
  return PlanePolytope::from_constraints(basics);
}

}  // namespace polycontact
