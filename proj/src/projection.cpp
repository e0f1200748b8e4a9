#include <polycontact/projection.hpp>

#include <algorithm>
#include <stdexcept>

namespace polycontact {

namespace {

void require_tree(const AdjacencySpace& f) {
  if (!is_connected(f)) throw std::invalid_argument("space is not connected");
  if (!is_acyclic(f)) throw std::invalid_argument("space has a simple cycle");
}

}  // namespace

std::vector<std::vector<Cell>> alpha_levels(const AdjacencySpace& f, Cell root) {
  require_tree(f);
  if (root >= f.size()) throw std::invalid_argument("root is not a cell");
  std::vector<char> placed(f.size(), 0);
  std::vector<std::vector<Cell>> levels{{root}};
  placed[root] = 1;
  while (true) {
    std::vector<Cell> next;
    for (Cell x : levels.back())
      for (Cell y : f.neighbours(x))
        if (!placed[y]) {
          placed[y] = 1;
          next.push_back(y);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

Numeration numeration(const AdjacencySpace& f, Cell root) {
  Numeration num{root, std::vector<std::size_t>(f.size()), {}};
  for (const auto& level : alpha_levels(f, root))
    for (Cell c : level) {
      num.number[c] = num.order.size();
      num.order.push_back(c);
    }
  return num;
}

bool is_valid_numeration(const AdjacencySpace& f, const Numeration& num) {
  if (num.number.size() != f.size() || num.order.size() != f.size() || num.root >= f.size()) return false;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (num.order[k] >= f.size() || num.number[num.order[k]] != k) return false;
  if (num.number[num.root] != 0) return false;
  std::vector<std::size_t> level(f.size());
  try {
    auto levels = alpha_levels(f, num.root);
    for (std::size_t l = 0; l < levels.size(); ++l)
      for (Cell c : levels[l]) level[c] = l;
  } catch (const std::invalid_argument&) {
    return false;
  }
  for (Cell x = 0; x < f.size(); ++x)
    for (Cell y = 0; y < f.size(); ++y)
      if (level[x] < level[y] && num.number[x] >= num.number[y]) return false;
  return true;
}

std::vector<Cell> arrangement(const AdjacencySpace& f, const Numeration& num) {
  if (!is_valid_numeration(f, num)) throw std::invalid_argument("invalid numeration");
  std::vector<Cell> j{num.root};
  for (std::size_t k = 1; k < f.size(); ++k) {
    Cell x = num.order[k];
    Cell parent = f.size();
    for (Cell y : f.neighbours(x))
      if (num.number[y] < k) {
        if (parent != f.size()) throw std::invalid_argument("cell has two lower-numbered neighbours");
        parent = y;
      }
    if (parent == f.size()) throw std::invalid_argument("cell has no lower-numbered neighbour");
    auto at = std::find(j.begin(), j.end(), parent);
    j.insert(at + 1, {x, parent});
  }
  return j;
}

std::vector<IntervalPolytope> project_line(const AdjacencySpace& f, const std::vector<Cell>& j) {
  if (j.empty()) throw std::invalid_argument("empty arrangement");
  std::vector<std::vector<IntervalPiece>> raw(f.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (j[k] >= f.size()) throw std::invalid_argument("arrangement names an unknown cell");
    raw[j[k]].push_back({Rational(static_cast<long>(k)), Rational(static_cast<long>(k + 1))});
  }
  raw[j.front()].push_back({std::nullopt, Rational(0)});
  raw[j.front()].push_back({Rational(static_cast<long>(j.size())), std::nullopt});
  std::vector<IntervalPolytope> out;
  for (auto& pieces : raw) out.push_back(IntervalPolytope::canonicalize(std::move(pieces)));
  return out;
}

std::vector<CylinderPolytope> project(const AdjacencySpace& f, const std::vector<Cell>& j, int dim) {
  std::vector<CylinderPolytope> out;
  for (auto& p : project_line(f, j)) out.push_back(lift(p, dim));
  return out;
}

}  // namespace polycontact
