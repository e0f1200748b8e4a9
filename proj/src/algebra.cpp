#include <polycontact/algebra.hpp>

#include <sstream>
#include <stdexcept>

namespace polycontact {

FiniteContactAlgebra::FiniteContactAlgebra(const AdjacencySpace& f) {
  if (f.size() > 64) throw std::invalid_argument("finite algebra supports at most 64 cells");
  names_ = f.cells();
  rows_.assign(f.size(), 0);
  for (Cell x = 0; x < f.size(); ++x)
    for (Cell y = 0; y < f.size(); ++y)
      if (x == y || f.adjacent(x, y)) rows_[x] |= Element{1} << y;
  full_ = f.size() == 64 ? ~Element{0} : (Element{1} << f.size()) - 1;
}

FiniteContactAlgebra FiniteContactAlgebra::from_relation_unchecked(std::vector<std::string> cells,
                                                                   std::vector<std::vector<char>> relation) {
  if (cells.size() > 64) throw std::invalid_argument("finite algebra supports at most 64 cells");
  if (relation.size() != cells.size()) throw std::invalid_argument("relation has the wrong number of rows");
  FiniteContactAlgebra alg;
  alg.names_ = std::move(cells);
  const std::size_t n = alg.names_.size();
  alg.rows_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (relation[x].size() != n) throw std::invalid_argument("relation has the wrong number of columns");
    for (std::size_t y = 0; y < n; ++y)
      if (relation[x][y]) alg.rows_[x] |= Element{1} << y;
  }
  alg.full_ = n == 64 ? ~Element{0} : (Element{1} << n) - 1;
  return alg;
}

bool FiniteContactAlgebra::contact(Element x, Element y) const {
  for (std::size_t c = 0; c < rows_.size(); ++c)
    if ((x >> c & 1) && (rows_[c] & y)) return true;
  return false;
}

std::string FiniteContactAlgebra::describe(Element x) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t c = 0; c < names_.size(); ++c) {
    if (!(x >> c & 1)) continue;
    if (!first) out += ',';
    out += names_[c];
    first = false;
  }
  return out + "}";
}

FiniteContactAlgebra induced_algebra(const AdjacencySpace& f) { return FiniteContactAlgebra(f); }

namespace {

template <class P>
bool contact_of_kind(ContactKind kind, const P& x, const P& y) {
  switch (kind) {
    case ContactKind::Strong: return contact_SC(x, y);
    case ContactKind::Topological: return contact_C(x, y);
    case ContactKind::Overlap: return overlap(x, y);
  }
  return false;
}

const AxiomCheck& find_check(const std::vector<AxiomCheck>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

std::string checks_text(const std::vector<AxiomCheck>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << (c.passed ? " PASS" : " FAIL");
    if (!c.passed) out << ' ' << c.witness;
    out << '\n';
  }
  return out.str();
}

bool all_pass(const std::vector<AxiomCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace

bool IntervalAlgebra::contact(const Element& x, const Element& y) const { return contact_of_kind(kind_, x, y); }
bool PlaneAlgebra::contact(const Element& x, const Element& y) const { return contact_of_kind(kind_, x, y); }
bool CylinderAlgebra::contact(const Element& x, const Element& y) const { return contact_of_kind(kind_, x, y); }

bool AuditReport::all_passed() const { return all_pass(checks); }
const AxiomCheck& AuditReport::check(const std::string& name) const { return find_check(checks, name); }
std::string AuditReport::text() const { return checks_text(checks); }

bool MergeReport::all_passed() const { return all_pass(checks); }
const AxiomCheck& MergeReport::check(const std::string& name) const { return find_check(checks, name); }
std::string MergeReport::text() const { return checks_text(checks); }

AuditReport audit_axioms(const FiniteContactAlgebra& alg) {
  if (alg.size() > 8) throw std::invalid_argument("exhaustive audit supports at most 8 cells");
  AxiomAuditor<FiniteContactAlgebra> auditor(alg);
  const std::uint64_t count = std::uint64_t{1} << alg.size();
  for (std::uint64_t x = 0; x < count; ++x)
    for (std::uint64_t y = 0; y < count; ++y)
      for (std::uint64_t z = 0; z < count; ++z) auditor.visit(x, y, z);
  return auditor.report();
}

std::optional<FiniteContactAlgebra::Element> connectedness_witness(const FiniteContactAlgebra& alg) {
  if (alg.size() > 20) throw std::invalid_argument("exhaustive connectedness check supports at most 20 cells");
  for (std::uint64_t x = 1; x < alg.one(); ++x)
    if (!alg.contact(x, alg.complement(x))) return x;
  return std::nullopt;
}

bool is_connected_algebra(const FiniteContactAlgebra& alg) { return !connectedness_witness(alg).has_value(); }

}  // namespace polycontact
