#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polycontact {

using Cell = std::size_t;

// Finite set of cells with a reflexive symmetric adjacency relation. Cells are
// ordered by index; names are only labels.
class AdjacencySpace {
public:
  const std::vector<std::string>& cells() const { return names_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(Cell c) const { return names_.at(c); }
  // Throws std::out_of_range for unknown names.
  Cell index(std::string_view name) const;
  bool has_cell(std::string_view name) const;

  bool adjacent(Cell x, Cell y) const { return adj_[x][y]; }
  // Adjacent cells other than c itself, ascending.
  std::vector<Cell> neighbours(Cell c) const;
  // Unordered pairs {x, y} with x < y and xRy.
  std::vector<std::pair<Cell, Cell>> edges() const;

  bool operator==(const AdjacencySpace&) const = default;

private:
  friend AdjacencySpace mk_space(std::vector<std::string> cells,
                                 const std::vector<std::pair<std::string, std::string>>& edges);
  friend AdjacencySpace mk_space(std::vector<std::string> cells, const std::vector<std::pair<Cell, Cell>>& edges);

  std::vector<std::string> names_;
  std::vector<std::vector<char>> adj_;
};

// Takes the reflexive symmetric closure. Throws std::invalid_argument for an
// empty or repeated cell list and for edges naming unknown cells.
AdjacencySpace mk_space(std::vector<std::string> cells,
                        const std::vector<std::pair<std::string, std::string>>& edges);
AdjacencySpace mk_space(std::vector<std::string> cells, const std::vector<std::pair<Cell, Cell>>& edges);

bool is_connected(const AdjacencySpace& f);
// No simple cycles: a forest.
bool is_acyclic(const AdjacencySpace& f);

// A simple cycle written from its least cell towards the smaller of that cell's
// two cycle neighbours, so each cycle has exactly one representation.
using Cycle = std::vector<Cell>;

// All simple cycles in lexicographic order.
std::vector<Cycle> simple_cycles(const AdjacencySpace& f);
std::size_t count_simple_cycles(const AdjacencySpace& f);
// Lexicographically least simple cycle, found without listing the others.
std::optional<Cycle> least_simple_cycle(const AdjacencySpace& f);
bool is_simple_cycle(const AdjacencySpace& f, const Cycle& pi);

// Breaks pi at a next to b: adds a fresh cell a' adjacent only to b and itself,
// and removes the edge a-b. a' is appended as the last cell.
AdjacencySpace break_cycle(const AdjacencySpace& f, const Cycle& pi, Cell a, Cell b);

// map[x] is the image of source cell x in the target. Checks surjectivity, (p1)
// xRy => f(x)Rf(y), and (p2) every target edge is the image of a source edge.
bool check_pmorphism(const std::vector<Cell>& map, const AdjacencySpace& source, const AdjacencySpace& target);

struct UntieStep {
  Cycle cycle;
  Cell a, b;
  std::size_t cycles_before, cycles_after;
};

struct Untying {
  AdjacencySpace space;
  std::vector<Cell> map;  // untied cell -> original cell
  std::vector<UntieStep> steps;
};

// Throws std::invalid_argument when f is not connected. With count_cycles set,
// every step records the simple-cycle counts before and after it.
Untying untie(const AdjacencySpace& f, bool count_cycles = false);

// Default cell names a, b, ..., z, then c26, c27, ...
std::vector<std::string> default_cell_names(std::size_t n);

// Edge bitstring over the pairs (0,1), (0,2), ..., (n-2,n-1); the first pair is
// the most significant bit. Needs at most 11 cells.
std::uint64_t adjacency_code(const AdjacencySpace& f);
// Least adjacency_code over all relabellings, with the relabelling reaching it
// (perm[old] = new). Exhaustive over permutations, so meant for small spaces.
std::pair<std::uint64_t, std::vector<Cell>> canonical_code(const AdjacencySpace& f);

// Every connected space on n cells (default names) in ascending code order. With
// up_to_isomorphism, one canonically labelled representative per class.
std::vector<AdjacencySpace> connected_spaces(std::size_t n, bool up_to_isomorphism);

// `space { cells a b c; edges a-b b-c; }`
std::string to_string(const AdjacencySpace& f);
AdjacencySpace parse_space(std::string_view text);
std::string to_dot(const AdjacencySpace& f);

}  // namespace polycontact
