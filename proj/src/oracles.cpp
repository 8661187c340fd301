#include "knotzeros/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/LU>

namespace knotzeros::oracle {

std::uint64_t count_colorings(const Multigraph& g, int q) {
  if (q < 0) throw std::invalid_argument("q must be nonnegative");
  const int n = g.vertex_count();
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return 0;
  }
  if (n == 0) return 1;
  if (q == 0) return 0;
  std::vector<int> color(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges()) {
      if (color[e.u] == color[e.v]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    int i = 0;
    while (i < n && ++color[i] == q) color[i++] = 0;
    if (i == n) break;
  }
  return count;
}

double spanning_trees(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0 || !is_connected(g)) return 0.0;
  if (n == 1) return 1.0;
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    lap(e.u, e.u) += 1.0;
    lap(e.v, e.v) += 1.0;
    lap(e.u, e.v) -= 1.0;
    lap(e.v, e.u) -= 1.0;
  }
  return std::round(lap.topLeftCorner(n - 1, n - 1).partialPivLu().determinant());
}

int bicycle_dimension(const Multigraph& g) {
  // The cut space is spanned by the vertex stars; its Gram matrix over GF(2)
  // is the Laplacian mod 2, and dim(C meet C-perp) = dim C - rank(Gram).
  const int n = g.vertex_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    m[e.u][e.u] ^= 1;
    m[e.v][e.v] ^= 1;
    m[e.u][e.v] ^= 1;
    m[e.v][e.u] ^= 1;
  }
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (m[r][col]) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != rank && m[r][col]) {
        for (int c = 0; c < n; ++c) m[r][c] ^= m[rank][c];
      }
    }
    ++rank;
  }
  return n - component_count(g) - rank;
}

double distance_to_wheel_locus(Complex t) {
  const double pi = std::numbers::pi;
  const double theta = std::arg(t);
  double arc;
  if (std::abs(theta) <= 2.0 * pi / 3.0) {
    arc = std::abs(std::abs(t) - 1.0);
  } else {
    arc = std::min(std::abs(t - std::polar(1.0, 2.0 * pi / 3.0)),
                   std::abs(t - std::polar(1.0, -2.0 * pi / 3.0)));
  }
  const double lo = (3.0 - std::sqrt(5.0)) / 2.0;
  const double hi = (3.0 + std::sqrt(5.0)) / 2.0;
  const double segment = std::abs(t - Complex(std::clamp(t.real(), lo, hi), 0.0));
  return std::min(arc, segment);
}

double e_family_polar_residual(Complex t) {
  const double r = std::abs(t);
  const double theta = std::arg(t);
  return -1.0 + 1.0 / (r * r) + 2.0 * r * std::cos(theta) + 2.0 * std::cos(2.0 * theta);
}

Multigraph random_multigraph(std::mt19937_64& rng, int vertices, int edges, bool loops) {
  if (vertices < 1) throw std::invalid_argument("need at least one vertex");
  if (vertices == 1 && !loops && edges > 0) throw std::invalid_argument("no room for edges");
  std::uniform_int_distribution<int> pick(0, vertices - 1);
  Multigraph g(vertices);
  while (g.edge_count() < edges) {
    const int u = pick(rng), v = pick(rng);
    if (u == v && !loops) continue;
    g.add_edge(u, v);
  }
  return g;
}

Multigraph random_connected_multigraph(std::mt19937_64& rng, int vertices, int edges, bool loops) {
  if (edges < vertices - 1) throw std::invalid_argument("too few edges to connect");
  Multigraph g(vertices);
  for (int v = 1; v < vertices; ++v) {
    g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  }
  const Multigraph extra = random_multigraph(rng, vertices, edges - (vertices - 1), loops);
  for (const Edge& e : extra.edges()) g.add_edge(e.u, e.v);
  return g;
}

}  // namespace knotzeros::oracle
