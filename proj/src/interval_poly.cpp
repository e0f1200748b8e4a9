#include <polycontact/errors.hpp>
#include <polycontact/interval_poly.hpp>

#include <algorithm>
#include <cctype>

namespace polycontact {

namespace {

// -inf < every finite value
bool lo_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b.has_value();
  if (!b) return false;
  return *a < *b;
}

// Compares a lower bound against an upper bound: is lo <= hi (touching counts)?
bool lo_le_hi(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (!lo || !hi) return true;
  return *lo <= *hi;
}

bool lo_lt_hi(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (!lo || !hi) return true;
  return *lo < *hi;
}

const std::optional<Rational>& max_lo(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  return lo_less(a, b) ? b : a;
}

const std::optional<Rational>& min_hi(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

}  // namespace

IntervalPolytope IntervalPolytope::canonicalize(std::vector<IntervalPiece> raw) {
  std::erase_if(raw, [](const IntervalPiece& piece) { return !lo_lt_hi(piece.lo, piece.hi); });
  std::sort(raw.begin(), raw.end(),
            [](const IntervalPiece& a, const IntervalPiece& b) { return lo_less(a.lo, b.lo); });
  IntervalPolytope out;
  for (auto& piece : raw) {
    if (!out.pieces_.empty() && lo_le_hi(piece.lo, out.pieces_.back().hi)) {
      auto& last = out.pieces_.back();
      if (!piece.hi || (last.hi && *piece.hi > *last.hi)) last.hi = piece.hi;
      continue;
    }
    out.pieces_.push_back(std::move(piece));
  }
  return out;
}

IntervalPolytope IntervalPolytope::all() {
  IntervalPolytope out;
  out.pieces_.push_back({std::nullopt, std::nullopt});
  return out;
}

IntervalPolytope IntervalPolytope::interval(Rational lo, Rational hi) {
  return canonicalize({{std::move(lo), std::move(hi)}});
}

bool IntervalPolytope::is_all() const {
  return pieces_.size() == 1 && !pieces_[0].lo && !pieces_[0].hi;
}

bool IntervalPolytope::contains(const Rational& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const IntervalPiece& piece) {
    return (!piece.lo || *piece.lo <= x) && (!piece.hi || x <= *piece.hi);
  });
}

bool IntervalPolytope::interior_contains(const Rational& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const IntervalPiece& piece) {
    return (!piece.lo || *piece.lo < x) && (!piece.hi || x < *piece.hi);
  });
}

IntervalPolytope complement(const IntervalPolytope& p) {
  if (p.is_empty()) return IntervalPolytope::all();
  std::vector<IntervalPiece> gaps;
  std::optional<Rational> cursor;  // left end of the next gap; nullopt = -inf
  for (const auto& piece : p.pieces()) {
    if (piece.lo) gaps.push_back({cursor, piece.lo});
    if (!piece.hi) return IntervalPolytope::canonicalize(std::move(gaps));
    cursor = piece.hi;
  }
  gaps.push_back({cursor, std::nullopt});
  return IntervalPolytope::canonicalize(std::move(gaps));
}

IntervalPolytope join(const IntervalPolytope& p, const IntervalPolytope& q) {
  std::vector<IntervalPiece> raw = p.pieces();
  raw.insert(raw.end(), q.pieces().begin(), q.pieces().end());
  return IntervalPolytope::canonicalize(std::move(raw));
}

IntervalPolytope reg_meet(const IntervalPolytope& p, const IntervalPolytope& q) {
  std::vector<IntervalPiece> raw;
  for (const auto& a : p.pieces())
    for (const auto& b : q.pieces()) {
      const auto& lo = max_lo(a.lo, b.lo);
      const auto& hi = min_hi(a.hi, b.hi);
      if (lo_lt_hi(lo, hi)) raw.push_back({lo, hi});
    }
  return IntervalPolytope::canonicalize(std::move(raw));
}

bool contact_C(const IntervalPolytope& p, const IntervalPolytope& q) {
  for (const auto& a : p.pieces())
    for (const auto& b : q.pieces())
      if (lo_le_hi(max_lo(a.lo, b.lo), min_hi(a.hi, b.hi))) return true;
  return false;
}

bool overlap(const IntervalPolytope& p, const IntervalPolytope& q) {
  for (const auto& a : p.pieces())
    for (const auto& b : q.pieces())
      if (lo_lt_hi(max_lo(a.lo, b.lo), min_hi(a.hi, b.hi))) return true;
  return false;
}

bool contact_SC(const IntervalPolytope& p, const IntervalPolytope& q) { return contact_C(p, q); }

std::optional<IntervalWitness> sc_witness(const IntervalPolytope& p, const IntervalPolytope& q) {
  // Half the shorter of the two pieces meeting at the shared point keeps the
  // open interval inside their union.
  auto half_length = [](const IntervalPiece& piece) -> Rational {
    if (!piece.lo || !piece.hi) return Rational(1);
    return (*piece.hi - *piece.lo) / 2;
  };
  for (const auto& a : p.pieces())
    for (const auto& b : q.pieces()) {
      const auto& lo = max_lo(a.lo, b.lo);
      const auto& hi = min_hi(a.hi, b.hi);
      if (!lo_le_hi(lo, hi)) continue;
      if (!lo && !hi) return IntervalWitness{0, 1};
      if (lo_lt_hi(lo, hi)) {
        if (!lo) return IntervalWitness{*hi - 1, Rational(1, 2)};
        if (!hi) return IntervalWitness{*lo + 1, Rational(1, 2)};
        return IntervalWitness{(*lo + *hi) / 2, (*hi - *lo) / 2};
      }
      Rational r = std::min(half_length(a), half_length(b));
      return IntervalWitness{*lo, r};
    }
  return std::nullopt;
}

std::string to_string(const IntervalPolytope& p) {
  if (p.is_empty()) return "empty";
  if (p.is_all()) return "all";
  std::string out;
  for (const auto& piece : p.pieces()) {
    if (!out.empty()) out += "; ";
    out += piece.lo ? "[" + to_string(*piece.lo) : "(-inf";
    out += ",";
    out += piece.hi ? to_string(*piece.hi) + "]" : "inf)";
  }
  return out;
}

namespace {

class IntervalReader {
public:
  IntervalReader(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool try_consume(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string_view token() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                   text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }
  std::optional<Rational> bound(bool lower) {
    std::size_t at = pos_;
    auto tok = token();
    if (lower ? tok == "-inf" : (tok == "inf" || tok == "+inf")) return std::nullopt;
    if (tok.empty()) fail("expected a rational endpoint");
    try {
      return parse_rational(tok);
    } catch (const ParseError& e) {
      throw ParseError("malformed rational '" + std::string(tok) + "'", base_ + at + e.offset());
    }
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, base_ + pos_); }

  IntervalPiece piece() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected an interval");
    char open = text_[pos_++];
    if (open != '[' && open != '(') fail("expected '[' or '('");
    auto lo = bound(true);
    if ((open == '(') != !lo.has_value()) fail(lo ? "finite endpoints are closed: use '['" : "-inf needs '('");
    expect(',');
    auto hi = bound(false);
    skip_ws();
    if (pos_ >= text_.size()) fail("expected ']' or ')'");
    char close = text_[pos_++];
    if ((close == ')') != !hi.has_value()) fail(hi ? "finite endpoints are closed: use ']'" : "inf needs ')'");
    return {std::move(lo), std::move(hi)};
  }

private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

IntervalPolytope parse_interval_polytope(std::string_view text) {
  IntervalReader in(text, 0);
  if (in.try_consume("empty")) {
    if (!in.done()) in.fail("trailing input");
    return IntervalPolytope::empty();
  }
  if (in.try_consume("all")) {
    if (!in.done()) in.fail("trailing input");
    return IntervalPolytope::all();
  }
  std::vector<IntervalPiece> raw;
  raw.push_back(in.piece());
  while (!in.done()) {
    in.expect(';');
    raw.push_back(in.piece());
  }
  return IntervalPolytope::canonicalize(std::move(raw));
}

}  // namespace polycontact
