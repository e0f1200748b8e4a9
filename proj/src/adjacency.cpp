#include <polycontact/adjacency.hpp>
#include <polycontact/errors.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace polycontact {

Cell AdjacencySpace::index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::out_of_range("no cell named '" + std::string(name) + "'");
  return static_cast<Cell>(it - names_.begin());
}

bool AdjacencySpace::has_cell(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::vector<Cell> AdjacencySpace::neighbours(Cell c) const {
  std::vector<Cell> out;
  for (Cell y = 0; y < size(); ++y)
    if (y != c && adj_[c][y]) out.push_back(y);
  return out;
}

std::vector<std::pair<Cell, Cell>> AdjacencySpace::edges() const {
  std::vector<std::pair<Cell, Cell>> out;
  for (Cell x = 0; x < size(); ++x)
    for (Cell y = x + 1; y < size(); ++y)
      if (adj_[x][y]) out.emplace_back(x, y);
  return out;
}

AdjacencySpace mk_space(std::vector<std::string> cells, const std::vector<std::pair<Cell, Cell>>& edges) {
  if (cells.empty()) throw std::invalid_argument("an adjacency space needs at least one cell");
  auto sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated cell name");
  AdjacencySpace f;
  f.names_ = std::move(cells);
  f.adj_.assign(f.names_.size(), std::vector<char>(f.names_.size(), 0));
  for (Cell c = 0; c < f.names_.size(); ++c) f.adj_[c][c] = 1;
  for (auto [x, y] : edges) {
    if (x >= f.names_.size() || y >= f.names_.size()) throw std::invalid_argument("edge names an unknown cell");
    f.adj_[x][y] = f.adj_[y][x] = 1;
  }
  return f;
}

AdjacencySpace mk_space(std::vector<std::string> cells,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::pair<Cell, Cell>> idx;
  auto find = [&](const std::string& n) {
    auto it = std::find(cells.begin(), cells.end(), n);
    if (it == cells.end()) throw std::invalid_argument("edge names unknown cell '" + n + "'");
    return static_cast<Cell>(it - cells.begin());
  };
  for (const auto& [x, y] : edges) idx.emplace_back(find(x), find(y));
  return mk_space(std::move(cells), idx);
}

namespace {

std::size_t component_count(const AdjacencySpace& f) {
  std::vector<char> seen(f.size(), 0);
  std::size_t count = 0;
  for (Cell s = 0; s < f.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Cell> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Cell x = stack.back();
      stack.pop_back();
      for (Cell y : f.neighbours(x))
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return count;
}

// Depth-first walk over simple paths from path[0] through cells greater than
// path[0], neighbours in ascending order. `on_cycle` returns true to stop.
bool walk_cycles(const AdjacencySpace& f, std::vector<Cell>& path, std::vector<char>& used,
                 const std::function<bool(const Cycle&)>& on_cycle) {
  Cell start = path.front();
  Cell last = path.back();
  for (Cell y : f.neighbours(last)) {
    if (y == start && path.size() >= 3 && path[1] < last) {
      if (on_cycle(path)) return true;
      continue;
    }
    if (y <= start || used[y]) continue;
    used[y] = 1;
    path.push_back(y);
    bool stop = walk_cycles(f, path, used, on_cycle);
    path.pop_back();
    used[y] = 0;
    if (stop) return true;
  }
  return false;
}

void for_each_cycle(const AdjacencySpace& f, const std::function<bool(const Cycle&)>& on_cycle) {
  std::vector<char> used(f.size(), 0);
  for (Cell s = 0; s < f.size(); ++s) {
    std::vector<Cell> path{s};
    used[s] = 1;
    bool stop = walk_cycles(f, path, used, on_cycle);
    used[s] = 0;
    if (stop) return;
  }
}

}  // namespace

bool is_connected(const AdjacencySpace& f) { return component_count(f) == 1; }

bool is_acyclic(const AdjacencySpace& f) { return f.edges().size() + component_count(f) == f.size(); }

std::vector<Cycle> simple_cycles(const AdjacencySpace& f) {
  std::vector<Cycle> out;
  for_each_cycle(f, [&](const Cycle& c) {
    out.push_back(c);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_simple_cycles(const AdjacencySpace& f) {
  std::size_t n = 0;
  for_each_cycle(f, [&](const Cycle&) {
    ++n;
    return false;
  });
  return n;
}

std::optional<Cycle> least_simple_cycle(const AdjacencySpace& f) {
  if (is_acyclic(f)) return std::nullopt;
  // Paths are walked in lexicographic order and closing edges are tried before
  // extensions, so the first cycle reached is the least one.
  std::optional<Cycle> best;
  std::vector<char> used(f.size(), 0);
  for (Cell s = 0; s < f.size() && !best; ++s) {
    std::vector<Cell> path{s};
    used[s] = 1;
    walk_cycles(f, path, used, [&](const Cycle& c) {
      best = c;
      return true;
    });
    used[s] = 0;
  }
  return best;
}

bool is_simple_cycle(const AdjacencySpace& f, const Cycle& pi) {
  if (pi.size() < 3) return false;
  std::vector<char> seen(f.size(), 0);
  for (Cell c : pi) {
    if (c >= f.size() || seen[c]) return false;
    seen[c] = 1;
  }
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (!f.adjacent(pi[i], pi[(i + 1) % pi.size()])) return false;
  return true;
}

AdjacencySpace break_cycle(const AdjacencySpace& f, const Cycle& pi, Cell a, Cell b) {
  if (!is_simple_cycle(f, pi)) throw std::invalid_argument("not a simple cycle of the space");
  auto at = std::find(pi.begin(), pi.end(), a);
  if (at == pi.end()) throw std::invalid_argument("cell " + f.name(a) + " is not on the cycle");
  std::size_t i = static_cast<std::size_t>(at - pi.begin());
  Cell prev = pi[(i + pi.size() - 1) % pi.size()], next = pi[(i + 1) % pi.size()];
  if (b != prev && b != next) throw std::invalid_argument("cell " + f.name(b) + " is not next to " + f.name(a) + " on the cycle");

  std::string fresh = f.name(a) + "'";
  while (f.has_cell(fresh)) fresh += "'";
  auto names = f.cells();
  names.push_back(fresh);
  Cell a2 = names.size() - 1;
  std::vector<std::pair<Cell, Cell>> edges;
  for (auto e : f.edges())
    if (!(e == std::pair<Cell, Cell>(std::min(a, b), std::max(a, b)))) edges.push_back(e);
  edges.emplace_back(a2, b);
  return mk_space(std::move(names), edges);
}

bool check_pmorphism(const std::vector<Cell>& map, const AdjacencySpace& source, const AdjacencySpace& target) {
  if (map.size() != source.size()) return false;
  std::vector<char> hit(target.size(), 0);
  for (Cell y : map) {
    if (y >= target.size()) return false;
    hit[y] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
  for (Cell x = 0; x < source.size(); ++x)
    for (Cell y = 0; y < source.size(); ++y)
      if (source.adjacent(x, y) && !target.adjacent(map[x], map[y])) return false;  // (p1)
  // (p2): every target edge x'R'y' is the image of some source edge.
  std::vector<std::vector<char>> covered(target.size(), std::vector<char>(target.size(), 0));
  for (Cell x = 0; x < source.size(); ++x)
    for (Cell y = 0; y < source.size(); ++y)
      if (source.adjacent(x, y)) covered[map[x]][map[y]] = 1;
  for (Cell u = 0; u < target.size(); ++u)
    for (Cell v = 0; v < target.size(); ++v)
      if (target.adjacent(u, v) && !covered[u][v]) return false;
  return true;
}

Untying untie(const AdjacencySpace& f, bool count_cycles) {
  if (!is_connected(f)) throw std::invalid_argument("untying needs a connected space");
  Untying u{f, {}, {}};
  for (Cell c = 0; c < f.size(); ++c) u.map.push_back(c);
  while (auto pi = least_simple_cycle(u.space)) {
    Cell a = pi->front();
    Cell b = std::min((*pi)[1], pi->back());
    UntieStep step{*pi, a, b, 0, 0};
    if (count_cycles) step.cycles_before = count_simple_cycles(u.space);
    u.space = break_cycle(u.space, *pi, a, b);
    u.map.push_back(u.map[a]);
    if (count_cycles) step.cycles_after = count_simple_cycles(u.space);
    u.steps.push_back(std::move(step));
  }
  return u;
}

std::string to_string(const AdjacencySpace& f) {
  std::string out = "space { cells";
  for (const auto& n : f.cells()) out += " " + n;
  out += "; edges";
  for (auto [x, y] : f.edges()) out += " " + f.name(x) + "-" + f.name(y);
  return out + "; }";
}

std::string to_dot(const AdjacencySpace& f) {
  std::string out = "graph space {\n";
  for (const auto& n : f.cells()) out += "  \"" + n + "\";\n";
  for (auto [x, y] : f.edges()) out += "  \"" + f.name(x) + "\" -- \"" + f.name(y) + "\";\n";
  return out + "}\n";
}

namespace {

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

AdjacencySpace parse_space(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) != word) throw ParseError("expected '" + std::string(word) + "'", pos);
    pos += word.size();
  };
  auto name = [&] {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && name_char(text[pos])) ++pos;
    if (start == pos) throw ParseError("expected a cell name", start);
    return std::string(text.substr(start, pos - start));
  };
  auto at = [&](char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  };

  expect("space");
  expect("{");
  expect("cells");
  std::vector<std::string> cells;
  std::vector<std::size_t> cell_pos;
  while (!at(';')) {
    cell_pos.push_back(pos);
    cells.push_back(name());
  }
  expect(";");
  if (cells.empty()) throw ParseError("an adjacency space needs at least one cell", pos);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (cells[i] == cells[j]) throw ParseError("repeated cell '" + cells[i] + "'", cell_pos[i]);

  std::vector<std::pair<std::string, std::string>> edges;
  expect("edges");
  while (!at(';')) {
    std::size_t start = pos;
    std::string x = name();
    if (pos >= text.size() || text[pos] != '-') throw ParseError("expected '-' in edge", pos);
    ++pos;
    std::string y;
    std::size_t y_pos = pos;
    while (pos < text.size() && name_char(text[pos])) ++pos;
    y = std::string(text.substr(y_pos, pos - y_pos));
    if (y.empty()) throw ParseError("expected a cell name", y_pos);
    if (std::find(cells.begin(), cells.end(), x) == cells.end()) throw ParseError("unknown cell '" + x + "'", start);
    if (std::find(cells.begin(), cells.end(), y) == cells.end()) throw ParseError("unknown cell '" + y + "'", y_pos);
    edges.emplace_back(std::move(x), std::move(y));
  }
  expect(";");
  expect("}");
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return mk_space(std::move(cells), edges);
}

}  // namespace polycontact

namespace polycontact {

std::vector<std::string> default_cell_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "c" + std::to_string(i));
  return out;
}

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::uint64_t code_under(const AdjacencySpace& f, const std::vector<Cell>& perm) {
  const std::size_t n = f.size();
  const std::size_t bits = pair_count(n);
  std::uint64_t code = 0;
  std::size_t k = 0;
  // Pair (i, j) of the relabelled space is the original pair (inv[i], inv[j]).
  std::vector<Cell> inv(n);
  for (Cell c = 0; c < n; ++c) inv[perm[c]] = c;
  for (Cell i = 0; i < n; ++i)
    for (Cell j = i + 1; j < n; ++j, ++k)
      if (f.adjacent(inv[i], inv[j])) code |= std::uint64_t{1} << (bits - 1 - k);
  return code;
}

AdjacencySpace space_from_code(std::size_t n, std::uint64_t code) {
  const std::size_t bits = pair_count(n);
  std::vector<std::pair<Cell, Cell>> edges;
  std::size_t k = 0;
  for (Cell i = 0; i < n; ++i)
    for (Cell j = i + 1; j < n; ++j, ++k)
      if (code >> (bits - 1 - k) & 1) edges.emplace_back(i, j);
  return mk_space(default_cell_names(n), edges);
}

}  // namespace

std::uint64_t adjacency_code(const AdjacencySpace& f) {
  if (f.size() > 11) throw std::invalid_argument("adjacency codes need at most 11 cells");
  std::vector<Cell> id(f.size());
  for (Cell c = 0; c < f.size(); ++c) id[c] = c;
  return code_under(f, id);
}

std::pair<std::uint64_t, std::vector<Cell>> canonical_code(const AdjacencySpace& f) {
  if (f.size() > 11) throw std::invalid_argument("adjacency codes need at most 11 cells");
  std::vector<Cell> perm(f.size());
  for (Cell c = 0; c < f.size(); ++c) perm[c] = c;
  std::pair<std::uint64_t, std::vector<Cell>> best{code_under(f, perm), perm};
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto code = code_under(f, perm);
    if (code < best.first) best = {code, perm};
  }
  return best;
}

std::vector<AdjacencySpace> connected_spaces(std::size_t n, bool up_to_isomorphism) {
  if (n == 0) throw std::invalid_argument("spaces need at least one cell");
  if (n > 11) throw std::invalid_argument("enumeration supports at most 11 cells");
  const std::size_t bits = pair_count(n);
  if (bits > 30) throw std::invalid_argument("too many cells to enumerate every space");
  std::vector<AdjacencySpace> out;
  std::vector<char> seen;
  if (up_to_isomorphism) seen.assign(std::size_t{1} << bits, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    // Fewer than n-1 edges cannot connect n cells.
    if (static_cast<std::size_t>(__builtin_popcountll(code)) + 1 < n) continue;
    auto f = space_from_code(n, code);
    if (!is_connected(f)) continue;
    if (up_to_isomorphism) {
      if (seen[code]) continue;
      // Mark the whole isomorphism class; its least code is the representative.
      std::vector<Cell> perm(n);
      for (Cell c = 0; c < n; ++c) perm[c] = c;
      std::uint64_t least = code;
      do {
        auto image = code_under(f, perm);
        seen[image] = 1;
        least = std::min(least, image);
      } while (std::next_permutation(perm.begin(), perm.end()));
      out.push_back(space_from_code(n, least));
    } else {
      out.push_back(std::move(f));
    }
  }
  if (up_to_isomorphism)
    std::sort(out.begin(), out.end(),
              [](const AdjacencySpace& x, const AdjacencySpace& y) { return adjacency_code(x) < adjacency_code(y); });
  return out;
}

}  // namespace polycontact
