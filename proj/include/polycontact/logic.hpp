#pragma once

#include <polycontact/adjacency.hpp>
#include <polycontact/algebra.hpp>
#include <polycontact/errors.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polycontact {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Complement, Join };
  Kind kind;
  std::string name;  // Var only
  TermPtr left;      // Complement operand, or Join left
  TermPtr right;     // Join right
};

TermPtr make_var(std::string name);
TermPtr make_complement(TermPtr t);
TermPtr make_join(TermPtr a, TermPtr b);
// a.b = -((-a) + (-b))
TermPtr make_meet(TermPtr a, TermPtr b);
// 0 = v.(-v) and 1 = -0 for the variable v.
TermPtr make_zero(const std::string& v);
TermPtr make_one(const std::string& v);

bool same_term(const TermPtr& a, const TermPtr& b);
// A variable has depth 1.
std::size_t depth(const TermPtr& t);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Eq, Contact, Not, Or };
  Kind kind;
  TermPtr a, b;             // Eq, Contact
  FormulaPtr left, right;   // Not uses left only
};

FormulaPtr make_eq(TermPtr a, TermPtr b);
FormulaPtr make_contact(TermPtr a, TermPtr b);
FormulaPtr make_not(FormulaPtr f);
FormulaPtr make_or(FormulaPtr f, FormulaPtr g);
FormulaPtr make_and(FormulaPtr f, FormulaPtr g);
FormulaPtr make_implies(FormulaPtr f, FormulaPtr g);
FormulaPtr make_iff(FormulaPtr f, FormulaPtr g);

bool same_formula(const FormulaPtr& f, const FormulaPtr& g);
std::set<std::string> variables(const TermPtr& t);
std::set<std::string> variables(const FormulaPtr& f);

// Core syntax only (-, +, ==, C, ~, |), with the fewest parentheses that
// parse back to the same tree.
std::string to_string(const TermPtr& t);
std::string to_string(const FormulaPtr& f);

// Variables [a-z][a-z0-9]*; terms use - . + 0 1; formulas use == != <= C(,) ~ & |
// => <=>. Derived forms are expanded on the spot; 0 becomes v.(-v) for the least
// variable v of the whole input, or p when there is none.
FormulaPtr parse_formula(std::string_view text);
TermPtr parse_term(std::string_view text);

struct FormulaLine {
  std::size_t line;  // 1-based
  std::string text;
  FormulaPtr formula;
};
// One formula per line; blank lines and `#` comments are skipped. Error offsets
// are relative to the start of `text`.
std::vector<FormulaLine> parse_formula_file(std::string_view text);

class UnboundVariable : public std::runtime_error {
public:
  explicit UnboundVariable(const std::string& name) : std::runtime_error("unbound variable " + name), name_(name) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

template <ContactAlgebra A>
using Valuation = std::map<std::string, typename A::Element>;

namespace detail {

template <ContactAlgebra A, class Lookup>
typename A::Element eval_term(const Term& t, const A& alg, const Lookup& lookup) {
  switch (t.kind) {
    case Term::Kind::Var: return lookup(t.name);
    case Term::Kind::Complement: return alg.complement(eval_term(*t.left, alg, lookup));
    case Term::Kind::Join: return alg.join(eval_term(*t.left, alg, lookup), eval_term(*t.right, alg, lookup));
  }
  throw std::logic_error("bad term");
}

template <ContactAlgebra A, class Lookup>
bool eval_formula(const Formula& f, const A& alg, const Lookup& lookup) {
  switch (f.kind) {
    case Formula::Kind::Eq: return alg.equal(eval_term(*f.a, alg, lookup), eval_term(*f.b, alg, lookup));
    case Formula::Kind::Contact: return alg.contact(eval_term(*f.a, alg, lookup), eval_term(*f.b, alg, lookup));
    case Formula::Kind::Not: return !eval_formula(*f.left, alg, lookup);
    case Formula::Kind::Or: return eval_formula(*f.left, alg, lookup) || eval_formula(*f.right, alg, lookup);
  }
  throw std::logic_error("bad formula");
}

}  // namespace detail

template <ContactAlgebra A>
typename A::Element eval(const TermPtr& t, const A& alg, const Valuation<A>& v) {
  return detail::eval_term(*t, alg, [&](const std::string& name) {
    auto it = v.find(name);
    if (it == v.end()) throw UnboundVariable(name);
    return it->second;
  });
}

template <ContactAlgebra A>
bool eval(const FormulaPtr& f, const A& alg, const Valuation<A>& v) {
  return detail::eval_formula(*f, alg, [&](const std::string& name) {
    auto it = v.find(name);
    if (it == v.end()) throw UnboundVariable(name);
    return it->second;
  });
}

// --- axiom schemes ---------------------------------------------------------

struct AxiomScheme {
  std::string name;
  // Lowercase a b c stand for terms, $A $B $C for formulas.
  std::string text;
};

// Contact schemes C1-C4, connectedness, the propositional basis L1-L3 and the
// Boolean equations, in matching order.
const std::vector<AxiomScheme>& axiom_schemes();

// Name of the first scheme φ is an instance of.
std::optional<std::string> is_axiom_instance(const FormulaPtr& f);

// Every term over `vars` of depth at most max_depth, shortest first.
std::vector<TermPtr> term_pool(const std::vector<std::string>& vars, std::size_t max_depth);

struct AxiomInstance {
  std::string scheme;
  std::string text;
  FormulaPtr formula;
};

// All instances of every scheme with term placeholders drawn from
// term_pool(vars, max_depth) and formula placeholders from a fixed list of
// small formulas over vars.
std::vector<AxiomInstance> axiom_instances(const std::vector<std::string>& vars, std::size_t max_depth);

// --- countermodels ---------------------------------------------------------

struct Countermodel {
  AdjacencySpace space;
  std::map<std::string, std::uint64_t> valuation;  // variable -> cell bitmask
};

// First (space, valuation) falsifying φ: spaces by cell count and then
// ascending adjacency code (one per isomorphism class up to 6 cells), valuations
// in lexicographic order of the bitmasks of the sorted variables. nullopt only
// says there is no countermodel within max_cells cells.
std::optional<Countermodel> find_countermodel(const FormulaPtr& f, std::size_t max_cells, unsigned jobs = 1);

}  // namespace polycontact
