#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace knotzeros {

/// Endpoint pair of an edge. A loop has `u == v`.
struct Edge {
  int u = 0;
  int v = 0;

  bool is_loop() const { return u == v; }
  Edge sorted() const { return u <= v ? *this : Edge{v, u}; }
  auto operator<=>(const Edge&) const = default;
};

/// Undirected pseudograph: parallel edges are stored as repeated pairs and
/// loops are allowed. Edge order is significant only for indexing.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const;

  void add_edge(int u, int v);

  /// Sorted list of sorted endpoint pairs; equal for graphs that differ only
  /// in edge order.
  std::vector<Edge> canonical_edges() const;
  bool same_as(const Multigraph& other) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Multigraph with a +1/-1 sign on every edge.
class SignedMultigraph {
 public:
  SignedMultigraph() = default;
  SignedMultigraph(Multigraph graph, std::vector<int> signs);
  /// All edges positive.
  explicit SignedMultigraph(Multigraph graph);

  const Multigraph& graph() const { return graph_; }
  const std::vector<int>& signs() const { return signs_; }
  int count_sign(int sign) const;

 private:
  Multigraph graph_;
  std::vector<int> signs_;
};

Multigraph delete_edge(const Multigraph& g, int index);

/// Merges the endpoints of a non-loop edge. The merged vertex keeps the
/// smaller label; labels above the larger endpoint shift down by one. Other
/// edges between the two endpoints become loops.
Multigraph contract_edge(const Multigraph& g, int index);

/// Applies a vertex permutation: vertex `i` becomes `perm[i]`.
Multigraph relabel(const Multigraph& g, const std::vector<int>& perm);

int component_count(const Multigraph& g);
/// Cycle rank e - n + k.
int cyclomatic(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Bridge flags per edge (an edge whose removal increases the component
/// count). Loops and edges with a parallel twin are never bridges.
std::vector<bool> bridge_flags(const Multigraph& g);

enum class GraphKind { Circuit, FatLink, D1C, DC, Wheel, H3, HW };

GraphKind parse_graph_kind(const std::string& name);
std::string to_string(GraphKind kind);
int min_parameter(GraphKind kind);

/// Generators for the named graph families.
///   C_n   circuit on n vertices
///   FL_n  two vertices joined by n parallel edges
///   D1C_n C_n with one edge doubled
///   DC_n  C_n with every edge doubled
///   Wh_n  hub joined to every vertex of C_{n-1}
///   H3_n  two end vertices joined by n paths of length two
///   HW_n  hub plus rim C_m, m = (n-1)/2, every spoke subdivided once
Multigraph build_graph(GraphKind kind, int n);

/// Named planar dual pairs: (C_n, FL_n), (H3_n, DC_n), (Wh_n, Wh_n).
std::pair<Multigraph, Multigraph> dual_pair(GraphKind kind, int n);

enum class Family { A, B, E, F };

Family parse_family(const std::string& name);
std::string to_string(Family family);
/// Smallest admissible family parameter.
int min_parameter(Family family);
/// Throws std::invalid_argument if `n` is not a valid parameter.
void check_parameter(Family family, int n);

/// A member of one of the link families together with the data of its
/// shaded diagram D+.
struct LinkPresentation {
  Family family = Family::A;
  int n = 0;
  Multigraph graph;  // G+(L)
  int writhe = 0;
  int n_dark = 0;
  int n_light = 0;
  int crossings = 0;
  int n_components = 0;
};

LinkPresentation link_presentation(Family family, int n);

/// Family graph G+ without computing the component count.
Multigraph family_graph(Family family, int n);

/// Number of link components, 1 + log2 |T(G,-1,-1)|.
int link_component_count(const Multigraph& g);

}  // namespace knotzeros
