#pragma once

#include <polycontact/adjacency.hpp>
#include <polycontact/cylinder_poly.hpp>
#include <polycontact/interval_poly.hpp>

#include <vector>

namespace polycontact {

// Levels by distance from the root. Throws std::invalid_argument unless f is
// connected and acyclic.
std::vector<std::vector<Cell>> alpha_levels(const AdjacencySpace& f, Cell root);

struct Numeration {
  Cell root;
  std::vector<std::size_t> number;  // cell -> #
  std::vector<Cell> order;          // # -> cell
};

// Level by level, ties broken by cell index.
Numeration numeration(const AdjacencySpace& f, Cell root);
bool is_valid_numeration(const AdjacencySpace& f, const Numeration& num);

// The walk J of length 2|W| - 1 obtained by inserting each cell next to the
// leftmost occurrence of its unique lower-numbered neighbour. Throws
// std::invalid_argument for an invalid numeration.
std::vector<Cell> arrangement(const AdjacencySpace& f, const Numeration& num);

// Cell x gets the union of [k, k+1] over J(k) = x; the root J(0) also gets
// (-inf, 0] and [len J, inf).
std::vector<IntervalPolytope> project_line(const AdjacencySpace& f, const std::vector<Cell>& j);
std::vector<CylinderPolytope> project(const AdjacencySpace& f, const std::vector<Cell>& j, int dim);

}  // namespace polycontact
