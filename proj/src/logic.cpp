#include <polycontact/logic.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>

namespace polycontact {

TermPtr make_var(std::string name) {
  return std::make_shared<const Term>(Term{Term::Kind::Var, std::move(name), nullptr, nullptr});
}
TermPtr make_complement(TermPtr t) {
  return std::make_shared<const Term>(Term{Term::Kind::Complement, {}, std::move(t), nullptr});
}
TermPtr make_join(TermPtr a, TermPtr b) {
  return std::make_shared<const Term>(Term{Term::Kind::Join, {}, std::move(a), std::move(b)});
}
TermPtr make_meet(TermPtr a, TermPtr b) {
  return make_complement(make_join(make_complement(std::move(a)), make_complement(std::move(b))));
}
TermPtr make_zero(const std::string& v) {
  auto x = make_var(v);
  return make_meet(x, make_complement(x));
}
TermPtr make_one(const std::string& v) { return make_complement(make_zero(v)); }

bool same_term(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: return a->name == b->name;
    case Term::Kind::Complement: return same_term(a->left, b->left);
    case Term::Kind::Join: return same_term(a->left, b->left) && same_term(a->right, b->right);
  }
  return false;
}

std::size_t depth(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var: return 1;
    case Term::Kind::Complement: return 1 + depth(t->left);
    case Term::Kind::Join: return 1 + std::max(depth(t->left), depth(t->right));
  }
  return 0;
}

FormulaPtr make_eq(TermPtr a, TermPtr b) {
  return std::make_shared<const Formula>(Formula{Formula::Kind::Eq, std::move(a), std::move(b), nullptr, nullptr});
}
FormulaPtr make_contact(TermPtr a, TermPtr b) {
  return std::make_shared<const Formula>(
      Formula{Formula::Kind::Contact, std::move(a), std::move(b), nullptr, nullptr});
}
FormulaPtr make_not(FormulaPtr f) {
  return std::make_shared<const Formula>(Formula{Formula::Kind::Not, nullptr, nullptr, std::move(f), nullptr});
}
FormulaPtr make_or(FormulaPtr f, FormulaPtr g) {
  return std::make_shared<const Formula>(Formula{Formula::Kind::Or, nullptr, nullptr, std::move(f), std::move(g)});
}
FormulaPtr make_and(FormulaPtr f, FormulaPtr g) { return make_not(make_or(make_not(std::move(f)), make_not(std::move(g)))); }
FormulaPtr make_implies(FormulaPtr f, FormulaPtr g) { return make_or(make_not(std::move(f)), std::move(g)); }
FormulaPtr make_iff(FormulaPtr f, FormulaPtr g) { return make_and(make_implies(f, g), make_implies(g, f)); }

bool same_formula(const FormulaPtr& f, const FormulaPtr& g) {
  if (f == g) return true;
  if (f->kind != g->kind) return false;
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Contact: return same_term(f->a, g->a) && same_term(f->b, g->b);
    case Formula::Kind::Not: return same_formula(f->left, g->left);
    case Formula::Kind::Or: return same_formula(f->left, g->left) && same_formula(f->right, g->right);
  }
  return false;
}

namespace {

void collect(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind == Term::Kind::Var) {
    out.insert(t->name);
    return;
  }
  collect(t->left, out);
  if (t->right) collect(t->right, out);
}

void collect(const FormulaPtr& f, std::set<std::string>& out) {
  if (f->a) {
    collect(f->a, out);
    collect(f->b, out);
    return;
  }
  collect(f->left, out);
  if (f->right) collect(f->right, out);
}

}  // namespace

std::set<std::string> variables(const TermPtr& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

std::set<std::string> variables(const FormulaPtr& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

std::string to_string(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var: return t->name;
    case Term::Kind::Complement:
      if (t->left->kind == Term::Kind::Join) return "-(" + to_string(t->left) + ")";
      return "-" + to_string(t->left);
    case Term::Kind::Join: {
      std::string right = to_string(t->right);
      if (t->right->kind == Term::Kind::Join) right = "(" + right + ")";
      return to_string(t->left) + " + " + right;
    }
  }
  return {};
}

std::string to_string(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Eq: return to_string(f->a) + " == " + to_string(f->b);
    case Formula::Kind::Contact: return "C(" + to_string(f->a) + ", " + to_string(f->b) + ")";
    case Formula::Kind::Not:
      if (f->left->kind == Formula::Kind::Or) return "~(" + to_string(f->left) + ")";
      return "~" + to_string(f->left);
    case Formula::Kind::Or: {
      std::string right = to_string(f->right);
      if (f->right->kind == Formula::Kind::Or) right = "(" + right + ")";
      return to_string(f->left) + " | " + right;
    }
  }
  return {};
}

// --- parser ------------------------------------------------------------------

namespace {

enum class Tok {
  Ident, Meta, Contact, Zero, One, Minus, Plus, Dot, EqEq, Neq, Le, Iff, Implies, Not, Or, And, LParen, RParen,
  Comma, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s, bool schema) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto op = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), i});
    i += len;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() && (std::islower(static_cast<unsigned char>(s[j])) || std::isdigit(static_cast<unsigned char>(s[j]))))
        ++j;
      op(Tok::Ident, j - i);
    } else if (schema && c == '$' && i + 1 < s.size() && std::isupper(static_cast<unsigned char>(s[i + 1]))) {
      op(Tok::Meta, 2);
    } else if (c == 'C') {
      op(Tok::Contact, 1);
    } else if (c == '0') {
      op(Tok::Zero, 1);
    } else if (c == '1') {
      op(Tok::One, 1);
    } else if (c == '-') {
      op(Tok::Minus, 1);
    } else if (c == '+') {
      op(Tok::Plus, 1);
    } else if (c == '.') {
      op(Tok::Dot, 1);
    } else if (s.substr(i, 2) == "==") {
      op(Tok::EqEq, 2);
    } else if (s.substr(i, 2) == "!=") {
      op(Tok::Neq, 2);
    } else if (s.substr(i, 3) == "<=>") {
      op(Tok::Iff, 3);
    } else if (s.substr(i, 2) == "<=") {
      op(Tok::Le, 2);
    } else if (s.substr(i, 2) == "=>") {
      op(Tok::Implies, 2);
    } else if (c == '~') {
      op(Tok::Not, 1);
    } else if (c == '|') {
      op(Tok::Or, 1);
    } else if (c == '&') {
      op(Tok::And, 1);
    } else if (c == '(') {
      op(Tok::LParen, 1);
    } else if (c == ')') {
      op(Tok::RParen, 1);
    } else if (c == ',') {
      op(Tok::Comma, 1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
public:
  Parser(std::string_view text, bool schema) : toks_(tokenize(text, schema)) {
    if (schema) {
      zero_var_ = "$z";
      return;
    }
    for (const auto& t : toks_)
      if (t.kind == Tok::Ident && (zero_var_.empty() || t.text < zero_var_)) zero_var_ = t.text;
    if (zero_var_.empty()) zero_var_ = "p";
  }

  FormulaPtr formula() {
    auto f = iff();
    expect_end();
    return f;
  }

  TermPtr term() {
    auto t = sum();
    expect_end();
    return t;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
  }
  void expect_end() {
    if (peek().kind == Tok::RParen) throw ParseError("unbalanced ')'", peek().pos);
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
  }

  FormulaPtr iff() {
    auto f = implies();
    while (accept(Tok::Iff)) f = make_iff(f, implies());
    return f;
  }
  FormulaPtr implies() {
    auto f = disjunction();
    if (accept(Tok::Implies)) return make_implies(f, implies());
    return f;
  }
  FormulaPtr disjunction() {
    auto f = conjunction();
    while (accept(Tok::Or)) f = make_or(f, conjunction());
    return f;
  }
  FormulaPtr conjunction() {
    auto f = negation();
    while (accept(Tok::And)) f = make_and(f, negation());
    return f;
  }
  FormulaPtr negation() {
    if (accept(Tok::Not)) return make_not(negation());
    return atom();
  }
  FormulaPtr atom() {
    const Token& t = peek();
    if (t.kind == Tok::Contact) {
      ++pos_;
      expect(Tok::LParen, "'('");
      auto a = sum();
      expect(Tok::Comma, "','");
      auto b = sum();
      expect(Tok::RParen, "')'");
      return make_contact(a, b);
    }
    if (t.kind == Tok::Meta) {
      ++pos_;
      auto m = make_var(t.text);
      return make_eq(m, m);
    }
    if (t.kind == Tok::LParen) {
      // Either a parenthesized term starting a comparison or a parenthesized formula.
      std::size_t saved = pos_;
      try {
        return comparison();
      } catch (const ParseError&) {
        pos_ = saved;
      }
      ++pos_;
      auto f = iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    return comparison();
  }
  FormulaPtr comparison() {
    auto a = sum();
    const Token& op = peek();
    if (accept(Tok::EqEq)) return make_eq(a, sum());
    if (accept(Tok::Neq)) return make_not(make_eq(a, sum()));
    if (accept(Tok::Le)) {
      auto b = sum();
      return make_eq(make_join(a, b), b);
    }
    throw ParseError("expected '==', '!=' or '<='", op.pos);
  }

  TermPtr sum() {
    auto t = product();
    while (accept(Tok::Plus)) t = make_join(t, product());
    return t;
  }
  TermPtr product() {
    auto t = unary();
    while (accept(Tok::Dot)) t = make_meet(t, unary());
    return t;
  }
  TermPtr unary() {
    if (accept(Tok::Minus)) return make_complement(unary());
    return primary();
  }
  TermPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: ++pos_; return make_var(t.text);
      case Tok::Zero: ++pos_; return make_zero(zero_var_);
      case Tok::One: ++pos_; return make_one(zero_var_);
      case Tok::LParen: {
        ++pos_;
        auto inner = sum();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: throw ParseError("expected term", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string zero_var_;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text, false).formula(); }
TermPtr parse_term(std::string_view text) { return Parser(text, false).term(); }

std::vector<FormulaLine> parse_formula_file(std::string_view text) {
  std::vector<FormulaLine> out;
  std::size_t start = 0, line = 0;
  while (start <= text.size()) {
    ++line;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view body = text.substr(start, end - start);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    if (body.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        std::string trimmed(body);
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
        out.push_back({line, trimmed, parse_formula(body)});
        std::size_t lead = trimmed.find_first_not_of(" \t");
        out.back().text = trimmed.substr(lead);
      } catch (const ParseError& e) {
        throw e.shifted(start);
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

// --- axiom schemes -----------------------------------------------------------

const std::vector<AxiomScheme>& axiom_schemes() {
  static const std::vector<AxiomScheme> schemes{
      {"C1", "~C(0,a)"},
      {"C2", "C(a,b+c) <=> (C(a,b) | C(a,c))"},
      {"C3", "C(a,b) => C(b,a)"},
      {"C4", "a != 0 => C(a,a)"},
      {"connectedness", "a != 0 => (a != 1 => C(a,-a))"},
      {"L1", "$A => ($B => $A)"},
      {"L2", "($A => ($B => $C)) => (($A => $B) => ($A => $C))"},
      {"L3", "(~$A => ~$B) => ($B => $A)"},
      {"B-join-assoc", "a + (b + c) == (a + b) + c"},
      {"B-meet-assoc", "a.(b.c) == (a.b).c"},
      {"B-join-comm", "a + b == b + a"},
      {"B-meet-comm", "a.b == b.a"},
      {"B-join-absorb", "a + a.b == a"},
      {"B-meet-absorb", "a.(a + b) == a"},
      {"B-join-distrib", "a + b.c == (a + b).(a + c)"},
      {"B-meet-distrib", "a.(b + c) == a.b + a.c"},
      {"B-join-compl", "a + -a == 1"},
      {"B-meet-compl", "a.-a == 0"},
  };
  return schemes;
}

namespace {

struct Bindings {
  std::map<std::string, TermPtr> terms;
  std::map<std::string, FormulaPtr> formulas;
};

bool match_term(const TermPtr& pat, const TermPtr& t, Bindings& b) {
  if (pat->kind == Term::Kind::Var) {
    auto [it, fresh] = b.terms.emplace(pat->name, t);
    return fresh || same_term(it->second, t);
  }
  if (pat->kind != t->kind) return false;
  if (!match_term(pat->left, t->left, b)) return false;
  return !pat->right || match_term(pat->right, t->right, b);
}

bool is_formula_meta(const FormulaPtr& pat) {
  return pat->kind == Formula::Kind::Eq && pat->a->kind == Term::Kind::Var && pat->a->name.size() == 2 &&
         pat->a->name[0] == '$' && std::isupper(static_cast<unsigned char>(pat->a->name[1]));
}

bool match_formula(const FormulaPtr& pat, const FormulaPtr& f, Bindings& b) {
  if (is_formula_meta(pat)) {
    auto [it, fresh] = b.formulas.emplace(pat->a->name, f);
    return fresh || same_formula(it->second, f);
  }
  if (pat->kind != f->kind) return false;
  switch (pat->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Contact: return match_term(pat->a, f->a, b) && match_term(pat->b, f->b, b);
    case Formula::Kind::Not: return match_formula(pat->left, f->left, b);
    case Formula::Kind::Or: return match_formula(pat->left, f->left, b) && match_formula(pat->right, f->right, b);
  }
  return false;
}

const std::vector<std::pair<std::string, FormulaPtr>>& scheme_patterns() {
  static const auto patterns = [] {
    std::vector<std::pair<std::string, FormulaPtr>> out;
    for (const auto& s : axiom_schemes()) out.emplace_back(s.name, Parser(s.text, true).formula());
    return out;
  }();
  return patterns;
}

// Replaces the placeholders of a scheme text by parenthesized instances.
std::string instantiate(const std::string& text, const std::map<char, std::string>& terms,
                        const std::map<char, std::string>& formulas) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool alone = (i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]))) &&
                 (i + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])));
    if (c == '$') {
      out += "(" + formulas.at(text[i + 1]) + ")";
      ++i;
    } else if (std::islower(static_cast<unsigned char>(c)) && alone) {
      out += "(" + terms.at(c) + ")";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::optional<std::string> is_axiom_instance(const FormulaPtr& f) {
  for (const auto& [name, pat] : scheme_patterns()) {
    Bindings b;
    if (match_formula(pat, f, b)) return name;
  }
  return std::nullopt;
}

std::vector<TermPtr> term_pool(const std::vector<std::string>& vars, std::size_t max_depth) {
  std::vector<std::vector<TermPtr>> by_depth(max_depth + 1);
  if (max_depth == 0) return {};
  for (const auto& v : vars) by_depth[1].push_back(make_var(v));
  for (std::size_t d = 2; d <= max_depth; ++d) {
    for (const auto& t : by_depth[d - 1]) by_depth[d].push_back(make_complement(t));
    // Joins whose deeper side has depth exactly d - 1.
    for (std::size_t dl = 1; dl < d; ++dl)
      for (std::size_t dr = 1; dr < d; ++dr) {
        if (std::max(dl, dr) != d - 1) continue;
        for (const auto& l : by_depth[dl])
          for (const auto& r : by_depth[dr]) by_depth[d].push_back(make_join(l, r));
      }
  }
  std::vector<TermPtr> out;
  for (const auto& level : by_depth) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<AxiomInstance> axiom_instances(const std::vector<std::string>& vars, std::size_t max_depth) {
  std::vector<std::string> terms;
  for (const auto& t : term_pool(vars, max_depth)) terms.push_back(to_string(t));
  if (terms.empty()) return {};
  const std::string& x = vars.front();
  const std::string& y = vars.back();
  std::vector<std::string> formulas{"C(" + x + "," + y + ")", x + " == " + y, "C(" + x + ",-" + y + ")",
                                    x + " + " + y + " == " + y};

  std::vector<AxiomInstance> out;
  for (const auto& s : axiom_schemes()) {
    std::set<char> tvars, fvars;
    for (std::size_t i = 0; i < s.text.size(); ++i) {
      if (s.text[i] == '$') fvars.insert(s.text[++i]);
      else if (std::islower(static_cast<unsigned char>(s.text[i]))) tvars.insert(s.text[i]);
    }
    std::vector<char> tv(tvars.begin(), tvars.end()), fv(fvars.begin(), fvars.end());
    const std::vector<std::string>& pool_t = terms;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < tv.size(); ++i) combos *= pool_t.size();
    for (std::size_t i = 0; i < fv.size(); ++i) combos *= formulas.size();
    for (std::size_t k = 0; k < combos; ++k) {
      std::size_t rest = k;
      std::map<char, std::string> tm, fm;
      for (auto it = fv.rbegin(); it != fv.rend(); ++it) {
        fm[*it] = formulas[rest % formulas.size()];
        rest /= formulas.size();
      }
      for (auto it = tv.rbegin(); it != tv.rend(); ++it) {
        tm[*it] = pool_t[rest % pool_t.size()];
        rest /= pool_t.size();
      }
      std::string text = instantiate(s.text, tm, fm);
      out.push_back({s.name, text, parse_formula(text)});
    }
  }
  return out;
}

// --- countermodels -----------------------------------------------------------

std::optional<Countermodel> find_countermodel(const FormulaPtr& f, std::size_t max_cells, unsigned jobs) {
  if (max_cells < 1) throw std::invalid_argument("bound must be at least 1");
  auto var_set = variables(f);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  const std::size_t k = vars.size();
  jobs = std::max(1u, jobs);

  for (std::size_t n = 1; n <= max_cells; ++n) {
    if (n * k >= 63) throw std::invalid_argument("too many valuations to enumerate");
    const std::uint64_t total = std::uint64_t{1} << (n * k);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (const auto& space : connected_spaces(n, n <= 6)) {
      FiniteContactAlgebra alg(space);
      // Valuation index i gives the first variable its most significant n bits.
      auto falsified = [&](std::uint64_t i) {
        std::uint64_t vals[64];
        for (std::size_t j = 0; j < k; ++j) vals[j] = (i >> (n * (k - 1 - j))) & full;
        auto lookup = [&](const std::string& name) {
          for (std::size_t j = 0; j < k; ++j)
            if (vars[j] == name) return vals[j];
          throw UnboundVariable(name);
        };
        return !detail::eval_formula(*f, alg, lookup);
      };

      std::uint64_t found = total;
      if (jobs == 1 || total < 4096) {
        for (std::uint64_t i = 0; i < total; ++i)
          if (falsified(i)) {
            found = i;
            break;
          }
      } else {
        std::atomic<std::uint64_t> best{total};
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w)
          workers.emplace_back([&, w] {
            for (std::uint64_t i = w; i < best.load(std::memory_order_relaxed); i += jobs)
              if (falsified(i)) {
                std::uint64_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                return;
              }
          });
        for (auto& t : workers) t.join();
        found = best.load();
      }
      if (found < total) {
        Countermodel cm{space, {}};
        for (std::size_t j = 0; j < k; ++j) cm.valuation[vars[j]] = (found >> (n * (k - 1 - j))) & full;
        return cm;
      }
    }
  }
  return std::nullopt;
}

}  // namespace polycontact
