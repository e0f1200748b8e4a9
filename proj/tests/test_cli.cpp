#include <doctest.h>

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = polycontact::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(POLYCONTACT_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name, const std::string& contents) {
  auto dir = fs::temp_directory_path() / "polycontact_cli_test";
  fs::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("sc-check on vertical angles") {
  auto r = run({"sc-check", data("q1.poly"), data("q3.poly")});
  CHECK(r.code == 0);
  CHECK(r.out == "SC=false C=true overlap=false\n");
}

TEST_CASE("sc-check on shared endpoints and with a witness") {
  auto r = run({"sc-check", data("unit.interval"), data("next.interval"), "--witness"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("SC=true C=true overlap=false\nwitness interval centre=1 ", 0) == 0);
  auto c = run({"c-check", data("q1.poly"), data("q3.poly")});
  CHECK(c.out == "C=true\n");
}

TEST_CASE("bool-op") {
  CHECK(run({"bool-op", "complement", data("unit.interval")}).out == "(-inf,0]; [1,inf)\n");
  CHECK(run({"bool-op", "join", data("unit.interval"), data("next.interval")}).out == "[0,2]\n");
  CHECK(run({"bool-op", "meet", data("unit.interval"), data("next.interval")}).out == "empty\n");
  CHECK(run({"bool-op", "equal", data("q1.poly"), data("q1.poly")}).out == "equal=true\n");
  CHECK(run({"bool-op", "frobnicate", data("q1.poly")}).code == 2);
  CHECK(run({"bool-op", "join", data("q1.poly"), data("unit.interval")}).code == 2);
}

TEST_CASE("untie the triangle") {
  auto r = run({"untie", data("triangle.graph")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "space { cells a b c a'; edges a-c b-c b-a'; }\n"
        "map a->a b->b c->c a'->a\n"
        "steps=1 acyclic=true pmorphism=true\n");
}

TEST_CASE("project a star") {
  auto r = run({"project", data("star.graph"), "--dim", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("arrangement a b d b c b a\n") != std::string::npos);
  CHECK(r.out.find("image b cyl n=2 { [1,2]; [3,4]; [5,6] }\n") != std::string::npos);
  CHECK(run({"project", data("triangle.graph")}).code == 2);
}

TEST_CASE("audit reports") {
  auto g = run({"audit", data("triangle.graph")});
  CHECK(g.code == 0);
  CHECK(g.out.find("C3 PASS\n") != std::string::npos);
  CHECK(g.out.find("connected=true\n") != std::string::npos);
  auto split = scratch("split.graph", "space { cells a b; edges ; }\n");
  auto s = run({"audit", split.string()});
  CHECK(s.code == 1);
  CHECK(s.out.find("connectedness FAIL x={a}\n") != std::string::npos);
  auto p = run({"audit", "interval", "--samples", "100", "--seed", "7"});
  CHECK(p.code == 0);
  CHECK(p.out == run({"audit", "interval", "--samples", "100", "--seed", "7"}).out);
}

TEST_CASE("countermodel and eval") {
  auto r = run({"countermodel", "C(p,q) => p.q != 0", "--bound", "3"});
  CHECK(r.code == 1);
  CHECK(r.out == "countermodel=found cells=2\nspace { cells a b; edges a-b; }\nvaluation p={a} q={b}\n");
  auto none = run({"countermodel", "~C(0,p)", "--bound", "3"});
  CHECK(none.code == 0);
  CHECK(none.out == "countermodel=none bound=3\n");
  auto file = run({"countermodel", "--file", data("formulas.txt"), "--bound", "3", "--jobs", "2"});
  CHECK(file.code == 1);
  CHECK(file.out.find("line 2: countermodel=none bound=3\n") != std::string::npos);
  CHECK(file.out.find("line 7: countermodel=found cells=2\n") != std::string::npos);
  auto ev = run({"eval", "C(p,q) => C(q,p)", data("triangle.graph")});
  CHECK(ev.code == 0);
  CHECK(ev.out == "valid=true axiom=C3\n");
  auto bad = run({"eval", "C(p,q) => p == q", data("triangle.graph")});
  CHECK(bad.code == 1);
  CHECK(bad.out == "valid=false\nvaluation p={a} q={b}\n");
}

TEST_CASE("synthesize emits a verified certificate") {
  auto svg = fs::temp_directory_path() / "polycontact_cli_test" / "cert.svg";
  fs::create_directories(svg.parent_path());
  auto r = run({"synthesize", "C(p,q) => p.q != 0", "--bound", "3", "--dim", "1", "--svg", svg.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("value p cyl n=1 { (-inf,1]; [2,inf) }\n") != std::string::npos);
  CHECK(r.out.find("value q cyl n=1 { [1,2] }\n") != std::string::npos);
  CHECK(r.out.find("verified=true\n") != std::string::npos);
  CHECK(fs::exists(svg));
  CHECK(run({"synthesize", "x == x", "--bound", "2"}).code == 0);
}

TEST_CASE("render") {
  auto r = run({"render", data("q1.poly"), data("q3.poly"), "--box", "-2,-2,2,2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("<polygon points=\"200,200 300,200 300,100 200,100\"/>") != std::string::npos);
  auto line = run({"render", data("unit.interval"), "--box", "-1,0,3,1"});
  CHECK(line.out.find("<rect x=") != std::string::npos);
  CHECK(run({"render", data("q1.poly"), "--box", "1,2"}).code == 2);
}

TEST_CASE("error exit codes") {
  CHECK(run({"synthesize", "C(p"}).code == 2);
  CHECK(run({"synthesize", "C(p"}).err == "parse error: expected ',' at offset 3\n");
  CHECK(run({"sc-check", "/nonexistent/a.poly", data("q1.poly")}).code == 3);
  auto bad_poly = scratch("bad.poly", "poly { basic { 1 0 <= ; } }");
  CHECK(run({"sc-check", bad_poly.string(), data("q1.poly")}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"sc-check", data("q1.poly")}).code == 2);
  CHECK(run({"countermodel", "x == x", "--bound", "zero"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"synthesize",
                                "(p.q == 0 & q.r == 0 & p.r == 0 & p != 0 & q != 0 & r != 0) => ~(C(p,q) & C(q,r) & C(p,r))",
                                "--bound", "4", "--dim", "3", "--jobs", "3"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  CHECK(a.out.find("untie-steps 1\n") != std::string::npos);
}
