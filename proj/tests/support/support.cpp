#include "support.hpp"

#include <polycontact/geometry.hpp>

#include <algorithm>
#include <numeric>
#include <optional>

namespace testsupport {

using polycontact::HalfSpace;
using polycontact::Hyperplane;
using polycontact::IntervalPiece;
using polycontact::Point;

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

HalfSpace hs(Rational a, Rational b, Rational c) { return HalfSpace({std::move(a), std::move(b)}, std::move(c)); }

// Closed half-plane bounded by the line through p and q that contains `inside`.
HalfSpace side_through(const Point& p, const Point& q, const Point& inside) {
  Rational a = q[1] - p[1];
  Rational b = p[0] - q[0];
  Rational c = a * p[0] + b * p[1];
  if (a * inside[0] + b * inside[1] > c) return hs(-a, -b, -c);
  return hs(a, b, c);
}

std::vector<HalfSpace> box(Rational x1, Rational x2, Rational y1, Rational y2) {
  return {hs(1, 0, x2), hs(-1, 0, -x1), hs(0, 1, y2), hs(0, -1, -y1)};
}

std::vector<HalfSpace> triangle(const Point& p0, const Point& p1, const Point& p2) {
  return {side_through(p0, p1, p2), side_through(p1, p2, p0), side_through(p2, p0, p1)};
}

long floor_long(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

long ceil_long(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

struct Line {
  Rational a, b, c;
};

std::optional<Point> meet(const Line& l, const Line& m) {
  Rational det = l.a * m.b - l.b * m.a;
  if (det == 0) return std::nullopt;
  return Point{Rational((l.c * m.b - l.b * m.c) / det), Rational((l.a * m.c - l.c * m.a) / det)};
}

Rational sq(const Rational& r) { return r * r; }

struct ClosedSpan {
  Rational lo, hi;
};

// Closed spans of a part along the row y = t (horizontal) or the column x = t.
std::optional<ClosedSpan> part_span(const std::vector<HalfSpace>& part, const Rational& t, bool row) {
  std::optional<Rational> lo, hi;
  for (const auto& h : part) {
    // Along the row the free coordinate is x, fixed y = t; along the column the reverse.
    const Rational& free_coef = row ? h.normal()[0] : h.normal()[1];
    const Rational& fixed_coef = row ? h.normal()[1] : h.normal()[0];
    Rational rhs = h.offset() - fixed_coef * t;
    if (free_coef == 0) {
      if (rhs < 0) return std::nullopt;
      continue;
    }
    Rational bound = rhs / free_coef;
    if (free_coef > 0) {
      if (!hi || bound < *hi) hi = bound;
    } else {
      if (!lo || bound > *lo) lo = bound;
    }
  }
  if (!lo || !hi) return std::nullopt;  // bounded inputs only
  if (*lo > *hi) return std::nullopt;
  return ClosedSpan{*lo, *hi};
}

std::vector<ClosedSpan> merged(std::vector<ClosedSpan> spans) {
  std::sort(spans.begin(), spans.end(), [](const ClosedSpan& x, const ClosedSpan& y) { return x.lo < y.lo; });
  std::vector<ClosedSpan> out;
  for (auto& s : spans) {
    if (!out.empty() && s.lo <= out.back().hi) {
      if (s.hi > out.back().hi) out.back().hi = s.hi;
    } else {
      out.push_back(std::move(s));
    }
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t root(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent[root(x)] = root(y); }
};

Rational g_last_step = 0;

}  // namespace

Rational random_rational(Rng& rng, int lo, int hi, int max_den) {
  int den = uniform(rng, 1, max_den);
  int num = uniform(rng, lo * den, hi * den);
  return frac(num, den);
}

IntervalPolytope random_interval_polytope(Rng& rng) {
  std::vector<IntervalPiece> raw;
  int count = uniform(rng, 0, 3);
  for (int i = 0; i < count; ++i) {
    Rational lo = frac(uniform(rng, -8, 7), 2);
    Rational hi = lo + frac(uniform(rng, 1, 6), 2);
    IntervalPiece piece{lo, hi};
    if (uniform(rng, 0, 7) == 0) piece.lo.reset();
    if (uniform(rng, 0, 7) == 0) piece.hi.reset();
    raw.push_back(piece);
  }
  return IntervalPolytope::canonicalize(std::move(raw));
}

PlanePolytope random_plane_polytope(Rng& rng) {
  std::vector<std::vector<HalfSpace>> parts;
  int count = uniform(rng, 1, 3);
  for (int i = 0; i < count; ++i) {
    if (uniform(rng, 0, 1) == 0) {
      Rational x1 = frac(uniform(rng, -16, 12), 4), y1 = frac(uniform(rng, -16, 12), 4);
      parts.push_back(box(x1, x1 + frac(uniform(rng, 1, 16), 4), y1, y1 + frac(uniform(rng, 1, 16), 4)));
    } else {
      std::vector<HalfSpace> part;
      int k = uniform(rng, 1, 4);
      for (int j = 0; j < k; ++j) {
        Rational a, b;
        do {
          a = random_rational(rng, -4, 4, 4);
          b = random_rational(rng, -4, 4, 4);
        } while (a == 0 && b == 0);
        part.push_back(hs(a, b, random_rational(rng, -4, 4, 4)));
      }
      parts.push_back(std::move(part));
    }
  }
  return PlanePolytope::from_constraints(parts);
}

PlanePolytope random_bounded_polytope(Rng& rng) {
  std::vector<std::vector<HalfSpace>> parts;
  int count = uniform(rng, 1, 3);
  for (int i = 0; i < count; ++i) {
    if (uniform(rng, 0, 1) == 0) {
      int x1 = uniform(rng, -3, 2), y1 = uniform(rng, -3, 2);
      int x2 = std::min(3, x1 + uniform(rng, 1, 3)), y2 = std::min(3, y1 + uniform(rng, 1, 3));
      parts.push_back(box(x1, x2, y1, y2));
    } else {
      int dx = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
      int dy = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
      int x = uniform(rng, std::max(-3, -3 - dx), std::min(3, 3 - dx));
      int y = uniform(rng, std::max(-3, -3 - dy), std::min(3, 3 - dy));
      parts.push_back(triangle(Point{x, y}, Point{x + dx, y}, Point{x, y + dy}));
    }
  }
  return PlanePolytope::from_constraints(parts);
}

Rational last_flood_fill_step() { return g_last_step; }

bool flood_fill_sc(const PlanePolytope& a, const PlanePolytope& b) {
  if (a.is_empty() || b.is_empty()) return false;
  auto raw_parts = [](const PlanePolytope& p) {
    std::vector<std::vector<HalfSpace>> out;
    for (const auto& part : p.parts()) out.push_back(part.constraints());
    return out;
  };
  auto parts_a = raw_parts(a), parts_b = raw_parts(b);

  std::vector<Line> lines;
  std::vector<Hyperplane> seen;
  std::vector<Point> corners;
  for (const auto* group : {&parts_a, &parts_b})
    for (const auto& part : *group) {
      std::vector<Line> own;
      for (const auto& h : part) {
        own.push_back({h.normal()[0], h.normal()[1], h.offset()});
        Hyperplane l(h.normal(), h.offset());
        if (std::find(seen.begin(), seen.end(), l) == seen.end()) {
          seen.push_back(l);
          lines.push_back(own.back());
        }
      }
      for (std::size_t i = 0; i < own.size(); ++i)
        for (std::size_t j = i + 1; j < own.size(); ++j)
          if (auto v = meet(own[i], own[j])) {
            bool in = std::all_of(part.begin(), part.end(), [&](const HalfSpace& h) { return h.slack(*v) <= 0; });
            if (in) corners.push_back(*v);
          }
    }

  Rational xmin = corners.at(0)[0], xmax = xmin, ymin = corners[0][1], ymax = ymin;
  for (const auto& c : corners) {
    xmin = std::min(xmin, c[0]);
    xmax = std::max(xmax, c[0]);
    ymin = std::min(ymin, c[1]);
    ymax = std::max(ymax, c[1]);
  }
  std::vector<Point> vertices;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (auto v = meet(lines[i], lines[j]))
        if ((*v)[0] >= xmin && (*v)[0] <= xmax && (*v)[1] >= ymin && (*v)[1] <= ymax) vertices.push_back(*v);

  // Squared minimum feature separation.
  std::optional<Rational> delta2;
  auto consider = [&](Rational d) {
    if (d > 0 && (!delta2 || d < *delta2)) delta2 = std::move(d);
  };
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      consider(sq(vertices[i][0] - vertices[j][0]) + sq(vertices[i][1] - vertices[j][1]));
    for (const auto& l : lines) consider(sq(l.a * vertices[i][0] + l.b * vertices[i][1] - l.c) / (sq(l.a) + sq(l.b)));
  }
  Rational h(1, 4);
  while (delta2 && h * h * 64 > *delta2) h /= 2;
  g_last_step = h;

  const long n_cols = ceil_long((xmax - xmin) / h) + 5;
  const long n_rows = ceil_long((ymax - ymin) / h) + 5;

  // Shift the lattice until no lattice point is on a line and no vertex is on a lattice row or column.
  Rational x0, y0;
  for (int k = 1;; ++k) {
    x0 = xmin - 2 * h + h * frac(k, 97);
    y0 = ymin - 2 * h + h * frac((k * 37) % 89 + 1, 89);
    bool ok = true;
    for (const auto& v : vertices)
      if (is_integer((v[0] - x0) / h) || is_integer((v[1] - y0) / h)) ok = false;
    for (const auto& l : lines) {
      if (!ok) break;
      if (l.a == 0) {
        if (is_integer((l.c / l.b - y0) / h)) ok = false;
        continue;
      }
      for (long j = 0; j < n_rows && ok; ++j) {
        Rational x = (l.c - l.b * (y0 + h * j)) / l.a;
        if (is_integer((x - x0) / h)) ok = false;
      }
    }
    if (ok) break;
  }

  const auto idx = [n_cols](long i, long j) { return static_cast<std::size_t>(j * n_cols + i); };
  std::vector<char> in_a(static_cast<std::size_t>(n_cols * n_rows)), in_b(in_a.size());
  UnionFind uf(in_a.size());

  auto spans_of = [](const std::vector<std::vector<HalfSpace>>& parts, const Rational& t, bool row) {
    std::vector<ClosedSpan> out;
    for (const auto& part : parts)
      if (auto s = part_span(part, t, row)) out.push_back(*s);
    return out;
  };
  // Lattice index range [first, last] covered by a closed span along an axis with origin o.
  auto index_range = [&](const ClosedSpan& s, const Rational& o, long count) {
    long first = std::max(0L, ceil_long((s.lo - o) / h));
    long last = std::min(count - 1, floor_long((s.hi - o) / h));
    return std::pair<long, long>(first, last);
  };

  for (long j = 0; j < n_rows; ++j) {
    Rational y = y0 + h * j;
    auto sa = spans_of(parts_a, y, true);
    auto sb = spans_of(parts_b, y, true);
    for (const auto& s : sa) {
      auto [f, l] = index_range(s, x0, n_cols);
      for (long i = f; i <= l; ++i) in_a[idx(i, j)] = 1;
    }
    for (const auto& s : sb) {
      auto [f, l] = index_range(s, x0, n_cols);
      for (long i = f; i <= l; ++i) in_b[idx(i, j)] = 1;
    }
    sa.insert(sa.end(), sb.begin(), sb.end());
    for (const auto& s : merged(std::move(sa))) {
      auto [f, l] = index_range(s, x0, n_cols);
      for (long i = f; i < l; ++i) uf.unite(idx(i, j), idx(i + 1, j));
    }
  }
  for (long i = 0; i < n_cols; ++i) {
    Rational x = x0 + h * i;
    auto s = spans_of(parts_a, x, false);
    auto sb = spans_of(parts_b, x, false);
    s.insert(s.end(), sb.begin(), sb.end());
    for (const auto& span : merged(std::move(s))) {
      auto [f, l] = index_range(span, y0, n_rows);
      for (long j = f; j < l; ++j) uf.unite(idx(i, j), idx(i, j + 1));
    }
  }

  std::vector<char> root_a(in_a.size()), root_b(in_a.size());
  for (std::size_t k = 0; k < in_a.size(); ++k) {
    if (in_a[k]) root_a[uf.root(k)] = 1;
    if (in_b[k]) root_b[uf.root(k)] = 1;
  }
  for (std::size_t k = 0; k < in_a.size(); ++k)
    if (root_a[k] && root_b[k]) return true;
  return false;
}

}  // namespace testsupport

namespace testsupport {

using polycontact::AdjacencySpace;
using polycontact::Cell;

AdjacencySpace random_connected_space(Rng& rng, std::size_t n, std::size_t extra) {
  std::vector<std::pair<Cell, Cell>> edges;
  for (Cell c = 1; c < n; ++c) edges.emplace_back(std::uniform_int_distribution<Cell>(0, c - 1)(rng), c);
  if (n >= 2)
    for (std::size_t k = 0; k < extra; ++k) {
      Cell x = std::uniform_int_distribution<Cell>(0, n - 1)(rng), y = std::uniform_int_distribution<Cell>(0, n - 1)(rng);
      if (x != y) edges.emplace_back(x, y);
    }
  // Shuffle the labels so the tree structure is not tied to the cell order.
  std::vector<Cell> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  for (auto& [x, y] : edges) {
    x = relabel[x];
    y = relabel[y];
  }
  return polycontact::mk_space(polycontact::default_cell_names(n), edges);
}

std::vector<AdjacencySpace> all_labelled_trees(std::size_t n) {
  auto names = polycontact::default_cell_names(n);
  if (n == 1) return {polycontact::mk_space(names, std::vector<std::pair<Cell, Cell>>{})};
  if (n == 2) return {polycontact::mk_space(names, std::vector<std::pair<Cell, Cell>>{{0, 1}})};
  std::vector<AdjacencySpace> out;
  std::vector<Cell> code(n - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(n, 1);
    for (Cell c : code) ++degree[c];
    std::vector<std::pair<Cell, Cell>> edges;
    for (Cell c : code) {
      Cell leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, c);
      --degree[leaf];
      --degree[c];
    }
    Cell u = n, v = n;
    for (Cell c = 0; c < n; ++c)
      if (degree[c] == 1) (u == n ? u : v) = c;
    edges.emplace_back(u, v);
    out.push_back(polycontact::mk_space(names, edges));
    std::size_t k = 0;
    while (k < code.size() && ++code[k] == n) code[k++] = 0;
    if (k == code.size()) break;
  }
  return out;
}

std::size_t brute_force_cycle_count(const AdjacencySpace& f) {
  const std::size_t n = f.size();
  std::size_t total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Cell> s;
    for (Cell c = 0; c < n; ++c)
      if (mask >> c & 1) s.push_back(c);
    if (s.size() < 3) continue;
    // Hamiltonian cycles of the induced subgraph, fixing s[0] first: each cycle is
    // met twice (two directions).
    std::vector<Cell> rest(s.begin() + 1, s.end());
    std::size_t directed = 0;
    do {
      bool ok = f.adjacent(s[0], rest.front()) && f.adjacent(rest.back(), s[0]);
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = f.adjacent(rest[i], rest[i + 1]);
      directed += ok;
    } while (std::next_permutation(rest.begin(), rest.end()));
    total += directed / 2;
  }
  return total;
}

}  // namespace testsupport
