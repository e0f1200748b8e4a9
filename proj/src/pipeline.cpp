#include <polycontact/pipeline.hpp>
#include <polycontact/projection.hpp>

#include <sstream>

namespace polycontact {

MaskValuation preimage_valuation(const std::vector<Cell>& map, const MaskValuation& v) {
  MaskValuation out;
  for (const auto& [name, mask] : v) {
    std::uint64_t lifted = 0;
    for (Cell x = 0; x < map.size(); ++x)
      if (mask >> map[x] & 1) lifted |= std::uint64_t{1} << x;
    out[name] = lifted;
  }
  return out;
}

namespace {

bool eval_masks(const FormulaPtr& f, const AdjacencySpace& space, const MaskValuation& v) {
  FiniteContactAlgebra alg(space);
  return eval(f, alg, Valuation<FiniteContactAlgebra>(v.begin(), v.end()));
}

std::map<std::string, CylinderPolytope> merge_valuation(const CylinderAlgebra& alg,
                                                        const std::vector<CylinderPolytope>& images,
                                                        const MaskValuation& v) {
  std::map<std::string, CylinderPolytope> out;
  for (const auto& [name, mask] : v) out.emplace(name, merged(alg, images, mask));
  return out;
}

bool eval_geometric(const FormulaPtr& f, const CylinderAlgebra& alg,
                    const std::map<std::string, CylinderPolytope>& v) {
  return eval(f, alg, Valuation<CylinderAlgebra>(v.begin(), v.end()));
}

}  // namespace

std::optional<CountermodelCertificate> synthesize(const std::string& formula_text, std::size_t max_cells, int dim,
                                                  unsigned jobs) {
  if (dim < 1) throw DimensionError("dimension must be at least 1");
  CountermodelCertificate cert;
  cert.formula_text = formula_text;
  cert.formula = parse_formula(formula_text);
  auto cm = find_countermodel(cert.formula, max_cells, jobs);
  if (!cm) return std::nullopt;

  cert.discrete = cm->space;
  cert.discrete_valuation = cm->valuation;
  cert.discrete_value = eval_masks(cert.formula, cert.discrete, cert.discrete_valuation);
  if (cert.discrete_value) throw VerificationError("discrete countermodel does not falsify the formula");

  auto u = untie(cert.discrete);
  if (u.space.size() > 63) throw std::invalid_argument("untied space has more than 63 cells");
  cert.untied = u.space;
  cert.pmorphism = u.map;
  cert.untie_steps = u.steps.size();
  if (!check_pmorphism(cert.pmorphism, cert.untied, cert.discrete))
    throw VerificationError("untying map is not a p-morphism");
  cert.untied_valuation = preimage_valuation(cert.pmorphism, cert.discrete_valuation);
  cert.untied_value = eval_masks(cert.formula, cert.untied, cert.untied_valuation);
  if (cert.untied_value) throw VerificationError("p-morphism transfer: formula holds in the untied preimage");

  cert.root = 0;
  cert.arrangement = arrangement(cert.untied, numeration(cert.untied, cert.root));
  cert.dim = dim;
  cert.images = project(cert.untied, cert.arrangement, dim);
  CylinderAlgebra alg(dim);
  for (Cell x = 0; x < cert.untied.size(); ++x)
    for (Cell y = 0; y < cert.untied.size(); ++y)
      if ((x == y || cert.untied.adjacent(x, y)) != alg.contact(cert.images[x], cert.images[y]))
        throw VerificationError("projection adjacency: xRy iff SC(f(x), f(y)) fails at " + cert.untied.name(x) +
                                ", " + cert.untied.name(y));

  cert.geometric_valuation = merge_valuation(alg, cert.images, cert.untied_valuation);
  cert.geometric_value = eval_geometric(cert.formula, alg, cert.geometric_valuation);
  if (cert.geometric_value) throw VerificationError("merging: formula holds in the polytope algebra");
  return cert;
}

bool CertificateReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck& CertificateReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

std::string CertificateReport::text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << (c.passed ? " PASS" : " FAIL");
    if (!c.passed && !c.witness.empty()) out << ' ' << c.witness;
    out << '\n';
  }
  return out.str();
}

CertificateReport verify(const CountermodelCertificate& cert) {
  CertificateReport report;
  auto add = [&](std::string name, bool ok, std::string witness = {}) {
    report.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
  };
  const auto& f = cert.formula;

  add("discrete-false", !eval_masks(f, cert.discrete, cert.discrete_valuation));
  add("untied-acyclic", is_acyclic(cert.untied) && is_connected(cert.untied));
  add("p-morphism", check_pmorphism(cert.pmorphism, cert.untied, cert.discrete));
  add("preimage-valuation", preimage_valuation(cert.pmorphism, cert.discrete_valuation) == cert.untied_valuation);
  add("untied-false", !eval_masks(f, cert.untied, cert.untied_valuation));

  bool numbered = false;
  try {
    numbered = cert.arrangement == arrangement(cert.untied, numeration(cert.untied, cert.root));
  } catch (const std::invalid_argument&) {
  }
  add("arrangement", numbered);

  CylinderAlgebra alg(cert.dim);
  bool sized = cert.images.size() == cert.untied.size();
  add("projection", sized && numbered && cert.images == project(cert.untied, cert.arrangement, cert.dim));
  if (!sized) return report;

  auto merging = verify_merging(alg, cert.untied, cert.images);
  for (const auto& c : merging.checks) add("merge-" + c.name, c.passed, c.witness);

  auto values = merge_valuation(alg, cert.images, cert.untied_valuation);
  std::string mismatch;
  for (const auto& [name, poly] : values) {
    auto it = cert.geometric_valuation.find(name);
    if (it == cert.geometric_valuation.end() || !(it->second == poly)) {
      mismatch = name;
      break;
    }
  }
  if (mismatch.empty() && values.size() != cert.geometric_valuation.size()) mismatch = "extra variable";
  add("geometric-valuation", mismatch.empty(), mismatch);
  bool geometric = true;
  try {
    geometric = eval_geometric(f, alg, cert.geometric_valuation);
  } catch (const UnboundVariable& e) {
    add("geometric-false", false, "unbound " + e.name());
    return report;
  }
  add("geometric-false", !geometric);
  return report;
}

// --- text form -----------------------------------------------------------------

namespace {

std::string masks_text(const MaskValuation& v) {
  std::string out;
  for (const auto& [name, mask] : v) out += (out.empty() ? "" : " ") + name + "=" + std::to_string(mask);
  return out;
}

MaskValuation parse_masks(const std::string& text, std::size_t offset) {
  MaskValuation out;
  std::istringstream in(text);
  std::string item;
  while (in >> item) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected name=mask", offset);
    try {
      std::size_t used = 0;
      out[item.substr(0, eq)] = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw ParseError("bad mask", offset);
    } catch (const std::logic_error&) {
      throw ParseError("bad mask", offset);
    }
  }
  return out;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_string(const CountermodelCertificate& cert) {
  std::ostringstream out;
  out << "certificate\n";
  out << "formula " << cert.formula_text << '\n';
  out << "discrete " << to_string(cert.discrete) << '\n';
  out << "discrete-valuation " << masks_text(cert.discrete_valuation) << '\n';
  out << "untied " << to_string(cert.untied) << '\n';
  out << "untie-steps " << cert.untie_steps << '\n';
  out << "pmorphism";
  for (Cell x = 0; x < cert.pmorphism.size(); ++x)
    out << ' ' << cert.untied.name(x) << "->" << cert.discrete.name(cert.pmorphism[x]);
  out << '\n';
  out << "untied-valuation " << masks_text(cert.untied_valuation) << '\n';
  out << "root " << cert.untied.name(cert.root) << '\n';
  out << "arrangement";
  for (Cell c : cert.arrangement) out << ' ' << cert.untied.name(c);
  out << '\n';
  out << "dim " << cert.dim << '\n';
  for (Cell x = 0; x < cert.images.size(); ++x) out << "image " << cert.untied.name(x) << ' ' << to_string(cert.images[x]) << '\n';
  for (const auto& [name, poly] : cert.geometric_valuation) out << "value " << name << ' ' << to_string(poly) << '\n';
  out << "verdict discrete=" << bool_text(cert.discrete_value) << " untied=" << bool_text(cert.untied_value)
      << " geometric=" << bool_text(cert.geometric_value) << '\n';
  out << "end\n";
  return out.str();
}

CountermodelCertificate parse_certificate(std::string_view text) {
  CountermodelCertificate cert;
  std::map<std::string, std::string> fields;
  std::vector<std::pair<std::string, std::size_t>> image_lines, value_lines;
  std::map<std::string, std::size_t> where;
  std::size_t start = 0;
  bool header = false, ended = false;
  while (start < text.size() && !ended) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      auto sp = line.find(' ');
      std::string key = line.substr(0, sp);
      std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
      std::size_t rest_at = start + (sp == std::string::npos ? line.size() : sp + 1);
      if (!header) {
        if (key != "certificate") throw ParseError("expected 'certificate'", start);
        header = true;
      } else if (key == "end") {
        ended = true;
      } else if (key == "image") {
        image_lines.emplace_back(rest, rest_at);
      } else if (key == "value") {
        value_lines.emplace_back(rest, rest_at);
      } else {
        fields[key] = rest;
        where[key] = rest_at;
      }
    }
    start = end + 1;
  }
  if (!header) throw ParseError("expected 'certificate'", 0);
  if (!ended) throw ParseError("missing 'end'", text.size());
  auto need = [&](const std::string& key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError("missing '" + key + "' line", text.size());
    return it->second;
  };
  auto shifted = [&](const std::string& key, auto&& fn) {
    try {
      return fn(need(key));
    } catch (const ParseError& e) {
      throw e.shifted(where[key]);
    }
  };

  cert.formula_text = need("formula");
  cert.formula = shifted("formula", [](const std::string& s) { return parse_formula(s); });
  cert.discrete = shifted("discrete", [](const std::string& s) { return parse_space(s); });
  cert.discrete_valuation = parse_masks(need("discrete-valuation"), where["discrete-valuation"]);
  cert.untied = shifted("untied", [](const std::string& s) { return parse_space(s); });
  cert.untied_valuation = parse_masks(need("untied-valuation"), where["untied-valuation"]);
  try {
    cert.untie_steps = std::stoul(need("untie-steps"));
    cert.dim = std::stoi(need("dim"));
  } catch (const std::logic_error&) {
    throw ParseError("bad number", where["dim"]);
  }

  auto cell_of = [&](const AdjacencySpace& f, const std::string& name, const std::string& key) {
    if (!f.has_cell(name)) throw ParseError("unknown cell '" + name + "'", where[key]);
    return f.index(name);
  };
  cert.pmorphism.assign(cert.untied.size(), 0);
  std::vector<char> seen(cert.untied.size(), 0);
  {
    std::istringstream in(need("pmorphism"));
    std::string item;
    while (in >> item) {
      auto arrow = item.find("->");
      if (arrow == std::string::npos) throw ParseError("expected x->y", where["pmorphism"]);
      Cell x = cell_of(cert.untied, item.substr(0, arrow), "pmorphism");
      cert.pmorphism[x] = cell_of(cert.discrete, item.substr(arrow + 2), "pmorphism");
      seen[x] = 1;
    }
  }
  for (char s : seen)
    if (!s) throw ParseError("p-morphism is not total", where["pmorphism"]);
  cert.root = cell_of(cert.untied, need("root"), "root");
  {
    std::istringstream in(need("arrangement"));
    std::string name;
    while (in >> name) cert.arrangement.push_back(cell_of(cert.untied, name, "arrangement"));
  }
  cert.images.assign(cert.untied.size(), CylinderPolytope::empty(cert.dim));
  seen.assign(cert.untied.size(), 0);
  for (const auto& [rest, at] : image_lines) {
    auto sp = rest.find(' ');
    if (sp == std::string::npos) throw ParseError("expected cell and polytope", at);
    Cell x = cell_of(cert.untied, rest.substr(0, sp), "image");
    try {
      cert.images[x] = parse_cylinder_polytope(rest.substr(sp + 1));
    } catch (const ParseError& e) {
      throw e.shifted(at + sp + 1);
    }
    seen[x] = 1;
  }
  for (char s : seen)
    if (!s) throw ParseError("missing image line", text.size());
  for (const auto& [rest, at] : value_lines) {
    auto sp = rest.find(' ');
    if (sp == std::string::npos) throw ParseError("expected variable and polytope", at);
    try {
      cert.geometric_valuation.insert_or_assign(rest.substr(0, sp), parse_cylinder_polytope(rest.substr(sp + 1)));
    } catch (const ParseError& e) {
      throw e.shifted(at + sp + 1);
    }
  }
  {
    const std::string& v = need("verdict");
    cert.discrete_value = v.find("discrete=true") != std::string::npos;
    cert.untied_value = v.find("untied=true") != std::string::npos;
    cert.geometric_value = v.find("geometric=true") != std::string::npos;
  }
  return cert;
}

}  // namespace polycontact
