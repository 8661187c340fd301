#pragma once

#include <cstdint>
#include <random>

#include "knotzeros/graph.hpp"
#include "knotzeros/polynomial.hpp"

namespace knotzeros::oracle {

/// Proper q-colorings by exhaustive assignment (q^n steps).
std::uint64_t count_colorings(const Multigraph& g, int q);

/// Spanning-tree count of a connected graph from the reduced Laplacian.
double spanning_trees(const Multigraph& g);

/// Dimension over GF(2) of the bicycle space (cut space meet cycle space).
int bicycle_dimension(const Multigraph& g);

/// Distance from t to the union of the arc |t| = 1, |arg t| <= 2 pi/3 and
/// the real segment [(3 - sqrt 5)/2, (3 + sqrt 5)/2].
double distance_to_wheel_locus(Complex t);

/// Left side of -1 + 1/r^2 + 2 r cos(theta) + 2 cos(2 theta) = 0.
double e_family_polar_residual(Complex t);

/// Random connected multigraph; loops allowed when `loops` is set.
Multigraph random_connected_multigraph(std::mt19937_64& rng, int vertices, int edges, bool loops);

/// Random multigraph that may be disconnected.
Multigraph random_multigraph(std::mt19937_64& rng, int vertices, int edges, bool loops);

}  // namespace knotzeros::oracle
