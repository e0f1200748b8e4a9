#pragma once

#include <polycontact/adjacency.hpp>
#include <polycontact/interval_poly.hpp>
#include <polycontact/plane_poly.hpp>

#include <random>

namespace testsupport {

using polycontact::IntervalPolytope;
using polycontact::PlanePolytope;
using polycontact::Rational;
using Rng = std::mt19937_64;

// n/d in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Uniform on {k/den : lo*den <= k <= hi*den} for a random den in 1..max_den.
Rational random_rational(Rng& rng, int lo, int hi, int max_den);

// 0..3 pieces with endpoints in [-4,4] on a half-unit grid, rays now and then.
IntervalPolytope random_interval_polytope(Rng& rng);

// Unions of 1..3 basics built from grid boxes and arbitrary half-planes with
// coordinates in [-4,4] and denominators <= 4. May be unbounded or empty.
PlanePolytope random_plane_polytope(Rng& rng);

// Bounded unions of 1..3 integer boxes and right triangles in [-3,3]^2 whose
// slanted sides have slope in {+-1/2, +-1, +-2}. Never empty.
PlanePolytope random_bounded_polytope(Rng& rng);

// Connected space on n cells: a random tree plus `extra` random additional edges.
polycontact::AdjacencySpace random_connected_space(Rng& rng, std::size_t n, std::size_t extra);

// Every labelled tree on n cells (n^(n-2) of them for n >= 2), from Pruefer codes.
std::vector<polycontact::AdjacencySpace> all_labelled_trees(std::size_t n);

// Number of simple cycles counted as Hamiltonian cycles of induced subgraphs.
std::size_t brute_force_cycle_count(const polycontact::AdjacencySpace& f);

// Independent strong-contact decision for bounded polytopes by rasterizing a
// dyadic lattice finer than the exact minimum feature separation and joining
// lattice neighbours whose connecting segment stays inside Int(A u B).
bool flood_fill_sc(const PlanePolytope& a, const PlanePolytope& b);

// Lattice spacing chosen by the last flood_fill_sc call, for diagnostics.
Rational last_flood_fill_step();

}  // namespace testsupport
