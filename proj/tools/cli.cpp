#include "cli.hpp"

#include <polycontact/algebra.hpp>
#include <polycontact/logic.hpp>
#include <polycontact/pipeline.hpp>
#include <polycontact/projection.hpp>
#include <polycontact/render.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <variant>

namespace polycontact::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

using AnyPolytope = std::variant<IntervalPolytope, PlanePolytope, CylinderPolytope>;

// `poly {...}` is planar, `cyl n=.. {...}` a cylinder, anything else an interval polytope.
AnyPolytope parse_any(const std::string& text) {
  std::size_t lead = text.find_first_not_of(" \t\r\n");
  std::string_view body = lead == std::string::npos ? std::string_view() : std::string_view(text).substr(lead);
  auto shift = [&](auto&& fn) -> AnyPolytope {
    try {
      return fn(body);
    } catch (const ParseError& e) {
      throw e.shifted(lead == std::string::npos ? 0 : lead);
    }
  };
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  if (body.rfind("poly", 0) == 0) return shift([](std::string_view s) { return parse_plane_polytope(s); });
  if (body.rfind("cyl", 0) == 0) return shift([](std::string_view s) { return parse_cylinder_polytope(s); });
  return shift([](std::string_view s) { return parse_interval_polytope(s); });
}

AnyPolytope load_polytope(const std::string& path) { return parse_any(read_file(path)); }

const char* tf(bool b) { return b ? "true" : "false"; }

struct Predicates {
  bool sc, c, overlap;
  std::string witness;
};

Predicates predicates(const AnyPolytope& a, const AnyPolytope& b) {
  if (a.index() != b.index()) throw std::invalid_argument("polytopes of different kinds");
  return std::visit(
      [&](const auto& p) -> Predicates {
        using P = std::decay_t<decltype(p)>;
        const P& q = std::get<P>(b);
        Predicates r{contact_SC(p, q), contact_C(p, q), overlap(p, q), {}};
        if (auto w = sc_witness(p, q)) {
          if constexpr (std::is_same_v<P, PlanePolytope>)
            r.witness = "disk centre=" + to_string(w->centre) + " radius=" + w->radius.get_str();
          else if constexpr (std::is_same_v<P, IntervalPolytope>)
            r.witness = "interval centre=" + w->centre.get_str() + " radius=" + w->radius.get_str();
          else
            r.witness = "slab centre=" + w->base.centre.get_str() + " radius=" + w->base.radius.get_str() +
                        " dim=" + std::to_string(w->dim);
        }
        return r;
      },
      a);
}

// --- random carriers for sampled audits -------------------------------------

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational half(int k) {
  Rational r(k, 2);
  r.canonicalize();
  return r;
}

IntervalPolytope sample_interval(std::mt19937_64& rng) {
  std::vector<IntervalPiece> raw;
  int count = uniform(rng, 0, 3);
  for (int i = 0; i < count; ++i) {
    Rational lo = half(uniform(rng, -8, 7));
    IntervalPiece piece{lo, Rational(lo + half(uniform(rng, 1, 6)))};
    if (uniform(rng, 0, 7) == 0) piece.lo.reset();
    if (uniform(rng, 0, 7) == 0) piece.hi.reset();
    raw.push_back(piece);
  }
  return IntervalPolytope::canonicalize(std::move(raw));
}

PlanePolytope sample_plane(std::mt19937_64& rng) {
  std::vector<std::vector<HalfSpace>> parts;
  int count = uniform(rng, 1, 3);
  for (int i = 0; i < count; ++i) {
    std::vector<HalfSpace> part;
    int k = uniform(rng, 1, 4);
    for (int j = 0; j < k; ++j) {
      int a = 0, b = 0;
      while (a == 0 && b == 0) {
        a = uniform(rng, -4, 4);
        b = uniform(rng, -4, 4);
      }
      part.emplace_back(std::vector<Rational>{a, b}, half(uniform(rng, -8, 8)));
    }
    parts.push_back(std::move(part));
  }
  return PlanePolytope::from_constraints(parts);
}

// --- commands ----------------------------------------------------------------

struct Options {
  std::vector<std::string> positional;
  std::uint64_t seed = 1;
  std::size_t bound = 4;
  int dim = 1;
  unsigned jobs = 1;
  std::size_t samples = 500;
  std::string svg;
  std::string box = "-5,-5,5,5";
  std::string root;
  std::string file;
  bool witness = false;
};

void need_args(const Options& o, std::size_t n, const char* usage) {
  if (o.positional.size() != n) throw CLI::ValidationError(std::string("usage: ") + usage);
}

Viewport parse_box(const std::string& text) {
  std::vector<Rational> v;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    Rational r;
    try {
      r = Rational(item);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad box coordinate '" + item + "'", 0);
    }
    r.canonicalize();
    v.push_back(r);
  }
  if (v.size() != 4 || v[0] >= v[2] || v[1] >= v[3]) throw ParseError("box must be xmin,ymin,xmax,ymax", 0);
  return {v[0], v[1], v[2], v[3]};
}

int cmd_sc_check(const Options& o, std::ostream& out) {
  need_args(o, 2, "sc-check <fileA> <fileB>");
  auto a = load_polytope(o.positional[0]), b = load_polytope(o.positional[1]);
  auto r = predicates(a, b);
  out << "SC=" << tf(r.sc) << " C=" << tf(r.c) << " overlap=" << tf(r.overlap) << '\n';
  if (o.witness && r.sc) out << "witness " << r.witness << '\n';
  return 0;
}

int cmd_c_check(const Options& o, std::ostream& out) {
  need_args(o, 2, "c-check <fileA> <fileB>");
  auto r = predicates(load_polytope(o.positional[0]), load_polytope(o.positional[1]));
  out << "C=" << tf(r.c) << '\n';
  return 0;
}

int cmd_bool_op(const Options& o, std::ostream& out) {
  if (o.positional.empty()) throw CLI::ValidationError("usage: bool-op <complement|join|meet|equal> <fileA> [fileB]");
  const std::string& op = o.positional[0];
  bool unary = op == "complement";
  if (!unary && op != "join" && op != "meet" && op != "equal")
    throw CLI::ValidationError("unknown operation " + op);
  need_args(o, unary ? 2 : 3, "bool-op <complement|join|meet|equal> <fileA> [fileB]");
  auto a = load_polytope(o.positional[1]);
  if (unary) {
    std::visit([&](const auto& p) { out << to_string(complement(p)) << '\n'; }, a);
    return 0;
  }
  auto b = load_polytope(o.positional[2]);
  if (a.index() != b.index()) throw std::invalid_argument("polytopes of different kinds");
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        const P& q = std::get<P>(b);
        if (op == "join") {
          out << to_string(join(p, q)) << '\n';
        } else if (op == "meet") {
          out << to_string(reg_meet(p, q)) << '\n';
        } else if constexpr (std::is_same_v<P, PlanePolytope>) {
          out << "equal=" << tf(equals(p, q)) << '\n';
        } else {
          out << "equal=" << tf(p == q) << '\n';
        }
      },
      a);
  return 0;
}

int cmd_audit(const Options& o, std::ostream& out) {
  need_args(o, 1, "audit <graph-file|interval|plane|cylinder>");
  const std::string& what = o.positional[0];
  AuditReport report;
  bool connected = true;
  if (what == "interval") {
    IntervalAlgebra alg;
    report = audit_axioms<IntervalAlgebra>(alg, sample_interval, o.samples, o.seed);
    connected = !connectedness_witness<IntervalAlgebra>(alg, sample_interval, o.samples, o.seed).has_value();
  } else if (what == "plane") {
    PlaneAlgebra alg;
    report = audit_axioms<PlaneAlgebra>(alg, sample_plane, o.samples, o.seed);
    connected = !connectedness_witness<PlaneAlgebra>(alg, sample_plane, o.samples, o.seed).has_value();
  } else if (what == "cylinder") {
    CylinderAlgebra alg(o.dim);
    std::function<CylinderPolytope(std::mt19937_64&)> gen = [&](std::mt19937_64& rng) {
      return lift(sample_interval(rng), o.dim);
    };
    report = audit_axioms(alg, gen, o.samples, o.seed);
    connected = !connectedness_witness(alg, gen, o.samples, o.seed).has_value();
  } else {
    auto space = parse_space(read_file(what));
    FiniteContactAlgebra alg(space);
    if (space.size() <= 6) {
      report = audit_axioms(alg);
    } else {
      std::function<std::uint64_t(std::mt19937_64&)> gen = [&](std::mt19937_64& rng) { return rng() & alg.one(); };
      report = audit_axioms(alg, gen, o.samples, o.seed);
    }
    if (space.size() <= 20) {
      auto w = connectedness_witness(alg);
      connected = !w;
      report.checks.push_back({"connectedness", connected, w ? "x=" + alg.describe(*w) : ""});
      out << report.text() << "connected=" << tf(connected) << '\n';
      return report.all_passed() ? 0 : 1;
    }
  }
  out << report.text() << "connected=" << tf(connected) << '\n';
  return report.all_passed() ? 0 : 1;
}

int cmd_untie(const Options& o, std::ostream& out) {
  need_args(o, 1, "untie <graph-file>");
  auto space = parse_space(read_file(o.positional[0]));
  auto u = untie(space);
  out << to_string(u.space) << '\n';
  out << "map";
  for (Cell x = 0; x < u.map.size(); ++x) out << ' ' << u.space.name(x) << "->" << space.name(u.map[x]);
  out << '\n';
  out << "steps=" << u.steps.size() << " acyclic=" << tf(is_acyclic(u.space))
      << " pmorphism=" << tf(check_pmorphism(u.map, u.space, space)) << '\n';
  return 0;
}

int cmd_project(const Options& o, std::ostream& out) {
  need_args(o, 1, "project <graph-file>");
  auto space = parse_space(read_file(o.positional[0]));
  Cell root = 0;
  if (!o.root.empty()) {
    if (!space.has_cell(o.root)) throw CLI::ValidationError("unknown root cell " + o.root);
    root = space.index(o.root);
  }
  auto num = numeration(space, root);
  auto j = arrangement(space, num);
  out << "numeration";
  for (Cell c : num.order) out << ' ' << space.name(c);
  out << "\narrangement";
  for (Cell c : j) out << ' ' << space.name(c);
  out << '\n';
  auto images = project(space, j, o.dim);
  for (Cell c = 0; c < space.size(); ++c) out << "image " << space.name(c) << ' ' << to_string(images[c]) << '\n';
  if (!o.svg.empty()) {
    std::vector<LineRow> rows;
    for (Cell c = 0; c < space.size(); ++c) rows.emplace_back(space.name(c), images[c].base());
    write_file(o.svg, render_line_svg(rows, -1, static_cast<long>(j.size()) + 1));
  }
  return 0;
}

std::vector<std::pair<std::size_t, std::string>> formulas_of(const Options& o, std::size_t first_positional) {
  std::vector<std::pair<std::size_t, std::string>> out;
  if (!o.file.empty()) {
    for (const auto& line : parse_formula_file(read_file(o.file))) out.emplace_back(line.line, line.text);
    return out;
  }
  if (o.positional.size() <= first_positional) throw CLI::ValidationError("missing formula");
  out.emplace_back(0, o.positional[first_positional]);
  return out;
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.positional.empty()) throw CLI::ValidationError("usage: eval <formula> <graph-file> | eval --file f <graph-file>");
  std::string graph = o.positional.back();
  auto space = parse_space(read_file(graph));
  FiniteContactAlgebra alg(space);
  int code = 0;
  for (const auto& [line, text] : formulas_of(o, 0)) {
    if (o.file.empty() && o.positional.size() != 2) throw CLI::ValidationError("usage: eval <formula> <graph-file>");
    auto f = parse_formula(text);
    auto vs = variables(f);
    std::vector<std::string> vars(vs.begin(), vs.end());
    const std::size_t n = space.size(), k = vars.size();
    if (n * k >= 63) throw std::invalid_argument("too many valuations to enumerate");
    std::optional<std::uint64_t> bad;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << (n * k)) && !bad; ++i) {
      Valuation<FiniteContactAlgebra> v;
      for (std::size_t j = 0; j < k; ++j) v[vars[j]] = (i >> (n * (k - 1 - j))) & alg.one();
      if (!eval(f, alg, v)) bad = i;
    }
    if (line) out << "line " << line << ": ";
    out << "valid=" << tf(!bad);
    if (auto scheme = is_axiom_instance(f)) out << " axiom=" << *scheme;
    out << '\n';
    if (bad) {
      code = 1;
      out << "valuation";
      for (std::size_t j = 0; j < k; ++j) out << ' ' << vars[j] << '=' << alg.describe((*bad >> (n * (k - 1 - j))) & alg.one());
      out << '\n';
    }
  }
  return code;
}

int cmd_countermodel(const Options& o, std::ostream& out) {
  int code = 0;
  for (const auto& [line, text] : formulas_of(o, 0)) {
    auto f = parse_formula(text);
    auto cm = find_countermodel(f, o.bound, o.jobs);
    if (line) out << "line " << line << ": ";
    if (!cm) {
      out << "countermodel=none bound=" << o.bound << '\n';
      continue;
    }
    code = 1;
    FiniteContactAlgebra alg(cm->space);
    out << "countermodel=found cells=" << cm->space.size() << '\n' << to_string(cm->space) << '\n' << "valuation";
    for (const auto& [name, mask] : cm->valuation) out << ' ' << name << '=' << alg.describe(mask);
    out << '\n';
  }
  return code;
}

int cmd_synthesize(const Options& o, std::ostream& out) {
  need_args(o, 1, "synthesize <formula>");
  auto cert = synthesize(o.positional[0], o.bound, o.dim, o.jobs);
  if (!cert) {
    out << "countermodel=none bound=" << o.bound << '\n';
    return 0;
  }
  auto report = verify(*cert);
  out << to_string(*cert) << report.text() << "verified=" << tf(report.all_passed()) << '\n';
  if (!o.svg.empty()) {
    std::vector<LineRow> rows;
    for (const auto& [name, poly] : cert->geometric_valuation) rows.emplace_back(name, poly.base());
    write_file(o.svg, render_line_svg(rows, -1, static_cast<long>(cert->arrangement.size()) + 1));
  }
  return 1;
}

int cmd_render(const Options& o, std::ostream& out) {
  if (o.positional.empty()) throw CLI::ValidationError("usage: render <file>... [--svg out]");
  std::vector<AnyPolytope> polys;
  for (const auto& path : o.positional) polys.push_back(load_polytope(path));
  for (const auto& p : polys)
    if (p.index() != polys.front().index()) throw std::invalid_argument("polytopes of different kinds");
  std::string svg;
  if (std::holds_alternative<PlanePolytope>(polys.front())) {
    std::vector<PlaneLayer> layers;
    for (std::size_t i = 0; i < polys.size(); ++i) layers.emplace_back(o.positional[i], std::get<PlanePolytope>(polys[i]));
    std::optional<DiskWitness> disk;
    if (layers.size() == 2) disk = sc_witness(layers[0].second, layers[1].second);
    svg = render_plane_svg(layers, parse_box(o.box), disk);
  } else {
    std::vector<LineRow> rows;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const auto& p = polys[i];
      rows.emplace_back(o.positional[i], std::holds_alternative<IntervalPolytope>(p) ? std::get<IntervalPolytope>(p)
                                                                                     : std::get<CylinderPolytope>(p).base());
    }
    auto box = parse_box(o.box);
    svg = render_line_svg(rows, box.xmin, box.xmax);
  }
  if (o.svg.empty()) out << svg;
  else write_file(o.svg, svg);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong contact between polytopes, contact algebras and countermodel synthesis", "polycontact"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("args", o.positional, "positional arguments");
    return sub;
  };
  auto* sc = add("sc-check", "SC, C and overlap of two polytope files");
  sc->add_flag("--witness", o.witness, "print a strong-contact witness");
  add("c-check", "topological contact of two polytope files");
  add("bool-op", "complement, join, meet or equal on polytope files");
  auto* audit = add("audit", "contact-axiom audit of a graph's induced algebra or a polytope algebra");
  audit->add_option("--samples", o.samples, "sampled triples for infinite carriers");
  audit->add_option("--seed", o.seed, "random seed");
  audit->add_option("--dim", o.dim, "cylinder dimension")->check(CLI::PositiveNumber);
  add("untie", "untie a graph into an acyclic p-morphic preimage");
  auto* proj = add("project", "project a tree onto R^n");
  proj->add_option("--dim", o.dim, "ambient dimension")->check(CLI::PositiveNumber);
  proj->add_option("--root", o.root, "root cell");
  proj->add_option("--svg", o.svg, "write a number-line SVG");
  auto* ev = add("eval", "check a formula in a graph under every valuation");
  ev->add_option("--file", o.file, "formula file");
  auto* cm = add("countermodel", "bounded countermodel search");
  cm->add_option("--bound", o.bound, "largest number of cells")->check(CLI::PositiveNumber);
  cm->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  cm->add_option("--file", o.file, "formula file");
  auto* syn = add("synthesize", "polytope countermodel certificate");
  syn->add_option("--bound", o.bound, "largest number of cells")->check(CLI::PositiveNumber);
  syn->add_option("--dim", o.dim, "ambient dimension")->check(CLI::PositiveNumber);
  syn->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  syn->add_option("--svg", o.svg, "write a number-line SVG of the valuation");
  auto* ren = add("render", "SVG of plane polytopes or a number line");
  ren->add_option("--svg", o.svg, "output path (default stdout)");
  ren->add_option("--box", o.box, "viewport xmin,ymin,xmax,ymax");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "sc-check") return cmd_sc_check(o, out);
    if (name == "c-check") return cmd_c_check(o, out);
    if (name == "bool-op") return cmd_bool_op(o, out);
    if (name == "audit") return cmd_audit(o, out);
    if (name == "untie") return cmd_untie(o, out);
    if (name == "project") return cmd_project(o, out);
    if (name == "eval") return cmd_eval(o, out);
    if (name == "countermodel") return cmd_countermodel(o, out);
    if (name == "synthesize") return cmd_synthesize(o, out);
    if (name == "render") return cmd_render(o, out);
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace polycontact::cli
