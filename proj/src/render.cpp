#include <polycontact/render.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polycontact {

namespace {

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2", "#edc948", "#9c755f"};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::vector<Point> clipped_polygon(const BasicPolytope& b, const Viewport& view) {
  std::vector<HalfSpace> hs = b.constraints();
  hs.emplace_back(std::vector<Rational>{1, 0}, view.xmax);
  hs.emplace_back(std::vector<Rational>{-1, 0}, -view.xmin);
  hs.emplace_back(std::vector<Rational>{0, 1}, view.ymax);
  hs.emplace_back(std::vector<Rational>{0, -1}, -view.ymin);

  std::vector<Point> pts;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      auto hit = intersect_lines(Hyperplane(hs[i].normal(), hs[i].offset()), Hyperplane(hs[j].normal(), hs[j].offset()));
      if (!hit.point) continue;
      const Point& p = *hit.point;
      bool inside = std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& h) { return sgn(h.slack(p)) <= 0; });
      if (inside && std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
  if (pts.size() < 3) return {};

  // Sort by angle around the lowest-then-leftmost vertex, exactly.
  auto pivot_it = std::min_element(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
  });
  std::iter_swap(pts.begin(), pivot_it);
  const Point pivot = pts.front();
  std::sort(pts.begin() + 1, pts.end(), [&](const Point& a, const Point& b) {
    Rational cross = (a[0] - pivot[0]) * (b[1] - pivot[1]) - (a[1] - pivot[1]) * (b[0] - pivot[0]);
    if (cross != 0) return cross > 0;
    Rational da = abs(a[0] - pivot[0]) + abs(a[1] - pivot[1]);
    Rational db = abs(b[0] - pivot[0]) + abs(b[1] - pivot[1]);
    return da < db;
  });
  return pts;
}

std::string render_plane_svg(const std::vector<PlaneLayer>& layers, const Viewport& view,
                             const std::optional<DiskWitness>& disk) {
  const double x0 = view.xmin.get_d(), y0 = view.ymin.get_d();
  const double w = Rational(view.xmax - view.xmin).get_d(), h = Rational(view.ymax - view.ymin).get_d();
  const double scale = 400.0 / std::max(w, h);
  auto sx = [&](const Rational& x) { return fmt((x.get_d() - x0) * scale); };
  auto sy = [&](const Rational& y) { return fmt((h - (y.get_d() - y0)) * scale); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w * scale) << "\" height=\"" << fmt(h * scale)
      << "\" viewBox=\"0 0 " << fmt(w * scale) << ' ' << fmt(h * scale) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\" stroke=\"#999\"/>\n";
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const char* colour = kPalette[i % std::size(kPalette)];
    out << "<g id=\"" << escape(layers[i].first) << "\" fill=\"" << colour << "\" fill-opacity=\"0.45\" stroke=\""
        << colour << "\">\n";
    for (const auto& part : layers[i].second.parts()) {
      auto poly = clipped_polygon(part, view);
      if (poly.empty()) continue;
      out << "<polygon points=\"";
      for (std::size_t k = 0; k < poly.size(); ++k) out << (k ? " " : "") << sx(poly[k][0]) << ',' << sy(poly[k][1]);
      out << "\"/>\n";
    }
    out << "</g>\n";
  }
  if (disk) {
    out << "<circle cx=\"" << sx(disk->centre[0]) << "\" cy=\"" << sy(disk->centre[1]) << "\" r=\""
        << fmt(disk->radius.get_d() * scale) << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_line_svg(const std::vector<LineRow>& rows, const Rational& lo, const Rational& hi) {
  const double l = lo.get_d(), span = Rational(hi - lo).get_d();
  const double width = 600, margin = 80, row_h = 30;
  const double height = row_h * static_cast<double>(rows.size()) + 40;
  auto sx = [&](double x) { return margin + (std::clamp(x, l, l + span) - l) / span * (width - margin - 10); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const char* colour = kPalette[i % std::size(kPalette)];
    double y = 10 + row_h * static_cast<double>(i);
    out << "<text x=\"4\" y=\"" << fmt(y + 15) << "\" font-size=\"12\">" << escape(rows[i].first) << "</text>\n";
    out << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(y + 10) << "\" x2=\"" << fmt(width - 10) << "\" y2=\""
        << fmt(y + 10) << "\" stroke=\"#ccc\"/>\n";
    for (const auto& piece : rows[i].second.pieces()) {
      double a = piece.lo ? piece.lo->get_d() : l, b = piece.hi ? piece.hi->get_d() : l + span;
      if (b < l || a > l + span) continue;
      out << "<rect x=\"" << fmt(sx(a)) << "\" y=\"" << fmt(y + 4) << "\" width=\"" << fmt(sx(b) - sx(a))
          << "\" height=\"12\" fill=\"" << colour << "\"/>\n";
    }
  }
  double axis = height - 20;
  out << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(axis) << "\" x2=\"" << fmt(width - 10) << "\" y2=\""
      << fmt(axis) << "\" stroke=\"black\"/>\n";
  long first = static_cast<long>(std::ceil(l)), last = static_cast<long>(std::floor(l + span));
  long step = std::max(1L, (last - first) / 10);
  for (long t = first; t <= last; t += step)
    out << "<text x=\"" << fmt(sx(static_cast<double>(t))) << "\" y=\"" << fmt(axis + 14)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << t << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace polycontact
