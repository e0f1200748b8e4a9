#include <polycontact/cylinder_poly.hpp>
#include <polycontact/errors.hpp>

#include <cctype>

namespace polycontact {

namespace {

void require_same_dim(const CylinderPolytope& p, const CylinderPolytope& q) {
  if (p.dim() != q.dim())
    throw DimensionError("cylinders live in R^" + std::to_string(p.dim()) + " and R^" + std::to_string(q.dim()));
}

}  // namespace

CylinderPolytope::CylinderPolytope(IntervalPolytope base, int dim) : base_(std::move(base)), dim_(dim) {
  if (dim < 1) throw DimensionError("ambient dimension must be at least 1");
}

bool CylinderPolytope::contains(const Point& p) const {
  if (static_cast<int>(p.dim()) != dim_) throw DimensionError("point dimension does not match the cylinder");
  return base_.contains(p[0]);
}

CylinderPolytope lift(const IntervalPolytope& p, int dim) { return CylinderPolytope(p, dim); }

CylinderPolytope complement(const CylinderPolytope& p) { return {complement(p.base()), p.dim()}; }

CylinderPolytope join(const CylinderPolytope& p, const CylinderPolytope& q) {
  require_same_dim(p, q);
  return {join(p.base(), q.base()), p.dim()};
}

CylinderPolytope reg_meet(const CylinderPolytope& p, const CylinderPolytope& q) {
  require_same_dim(p, q);
  return {reg_meet(p.base(), q.base()), p.dim()};
}

bool contact_C(const CylinderPolytope& p, const CylinderPolytope& q) {
  require_same_dim(p, q);
  return contact_C(p.base(), q.base());
}

bool overlap(const CylinderPolytope& p, const CylinderPolytope& q) {
  require_same_dim(p, q);
  return overlap(p.base(), q.base());
}

bool contact_SC(const CylinderPolytope& p, const CylinderPolytope& q) {
  require_same_dim(p, q);
  return contact_SC(p.base(), q.base());
}

std::optional<SlabWitness> sc_witness(const CylinderPolytope& p, const CylinderPolytope& q) {
  require_same_dim(p, q);
  auto w = sc_witness(p.base(), q.base());
  if (!w) return std::nullopt;
  return SlabWitness{*w, p.dim()};
}

std::string to_string(const CylinderPolytope& p) {
  return "cyl n=" + std::to_string(p.dim()) + " { " + to_string(p.base()) + " }";
}

CylinderPolytope parse_cylinder_polytope(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) != word) throw ParseError("expected '" + std::string(word) + "'", pos);
    pos += word.size();
  };
  expect("cyl");
  expect("n=");
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (digits == pos || pos - digits > 6) throw ParseError("expected a dimension", digits);
  int dim = std::stoi(std::string(text.substr(digits, pos - digits)));
  if (dim < 1) throw ParseError("dimension must be at least 1", digits);
  expect("{");
  std::size_t body = pos;
  std::size_t close = text.find('}', body);
  if (close == std::string_view::npos) throw ParseError("expected '}'", text.size());
  std::string_view inner = text.substr(body, close - body);
  std::size_t lead = 0;
  while (lead < inner.size() && std::isspace(static_cast<unsigned char>(inner[lead]))) ++lead;
  std::size_t end = inner.size();
  while (end > lead && std::isspace(static_cast<unsigned char>(inner[end - 1]))) --end;
  IntervalPolytope base;
  try {
    base = parse_interval_polytope(inner.substr(lead, end - lead));
  } catch (const ParseError& e) {
    throw e.shifted(body + lead);
  }
  pos = close + 1;
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return CylinderPolytope(std::move(base), dim);
}

}  // namespace polycontact
