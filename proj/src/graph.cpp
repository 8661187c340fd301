#include "knotzeros/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "knotzeros/polynomial.hpp"
#include "knotzeros/tutte.hpp"

namespace knotzeros {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  require(vertex_count_ >= 0, "vertex count must be nonnegative");
  for (const auto& e : edges_) {
    require(e.u >= 0 && e.v >= 0 && e.u < vertex_count_ && e.v < vertex_count_,
            "edge endpoint out of range");
  }
}

const Edge& Multigraph::edge(int index) const {
  if (index < 0 || index >= edge_count()) throw std::out_of_range("edge index out of range");
  return edges_[index];
}

void Multigraph::add_edge(int u, int v) {
  require(u >= 0 && v >= 0 && u < vertex_count_ && v < vertex_count_, "edge endpoint out of range");
  edges_.push_back({u, v});
}

std::vector<Edge> Multigraph::canonical_edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.sorted());
  std::sort(out.begin(), out.end());
  return out;
}

bool Multigraph::same_as(const Multigraph& other) const {
  return vertex_count_ == other.vertex_count_ && canonical_edges() == other.canonical_edges();
}

SignedMultigraph::SignedMultigraph(Multigraph graph, std::vector<int> signs)
    : graph_(std::move(graph)), signs_(std::move(signs)) {
  require(static_cast<int>(signs_.size()) == graph_.edge_count(), "one sign per edge required");
  for (int s : signs_) require(s == 1 || s == -1, "edge signs must be +1 or -1");
}

SignedMultigraph::SignedMultigraph(Multigraph graph)
    : graph_(std::move(graph)), signs_(graph_.edge_count(), 1) {}

int SignedMultigraph::count_sign(int sign) const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), sign));
}

Multigraph delete_edge(const Multigraph& g, int index) {
  g.edge(index);
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + index);
  return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph contract_edge(const Multigraph& g, int index) {
  const Edge e = g.edge(index).sorted();
  if (e.is_loop()) throw std::invalid_argument("cannot contract a loop");
  auto map = [&](int w) {
    if (w == e.v) return e.u;
    return w > e.v ? w - 1 : w;
  };
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() - 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == index) continue;
    edges.push_back({map(g.edges()[i].u), map(g.edges()[i].v)});
  }
  return Multigraph(g.vertex_count() - 1, std::move(edges));
}

Multigraph relabel(const Multigraph& g, const std::vector<int>& perm) {
  require(static_cast<int>(perm.size()) == g.vertex_count(), "permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Multigraph(g.vertex_count(), std::move(edges));
}

int component_count(const Multigraph& g) {
  DisjointSets sets(g.vertex_count());
  int k = g.vertex_count();
  for (const auto& e : g.edges()) {
    if (sets.unite(e.u, e.v)) --k;
  }
  return k;
}

int cyclomatic(const Multigraph& g) {
  return g.edge_count() + component_count(g) - g.vertex_count();
}

bool is_connected(const Multigraph& g) { return component_count(g) <= 1; }

std::vector<bool> bridge_flags(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge index)
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    if (e.is_loop()) continue;
    adj[e.u].push_back({e.v, i});
    adj[e.v].push_back({e.u, i});
  }
  std::vector<bool> bridge(g.edge_count(), false);
  std::vector<int> order(n, -1), low(n, 0);
  int clock = 0;
  // Iterative Tarjan; skips the tree edge by index so parallel edges count
  // as back edges.
  struct Frame {
    int vertex;
    int parent_edge;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    order[root] = low[root] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.vertex].size()) {
        auto [w, idx] = adj[f.vertex][f.next++];
        if (idx == f.parent_edge) continue;
        if (order[w] < 0) {
          order[w] = low[w] = clock++;
          stack.push_back({w, idx, 0});
        } else {
          low[f.vertex] = std::min(low[f.vertex], order[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().vertex;
          low[parent] = std::min(low[parent], low[done.vertex]);
          if (low[done.vertex] > order[parent]) bridge[done.parent_edge] = true;
        }
      }
    }
  }
  return bridge;
}

GraphKind parse_graph_kind(const std::string& name) {
  if (name == "C") return GraphKind::Circuit;
  if (name == "FL") return GraphKind::FatLink;
  if (name == "D1C") return GraphKind::D1C;
  if (name == "DC") return GraphKind::DC;
  if (name == "Wheel" || name == "Wh") return GraphKind::Wheel;
  if (name == "H3") return GraphKind::H3;
  if (name == "HW") return GraphKind::HW;
  throw std::invalid_argument("unknown graph kind '" + name + "'");
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Circuit: return "C";
    case GraphKind::FatLink: return "FL";
    case GraphKind::D1C: return "D1C";
    case GraphKind::DC: return "DC";
    case GraphKind::Wheel: return "Wheel";
    case GraphKind::H3: return "H3";
    case GraphKind::HW: return "HW";
  }
  return "?";
}

int min_parameter(GraphKind kind) {
  switch (kind) {
    case GraphKind::Wheel: return 3;
    case GraphKind::HW: return 5;
    default: return 2;
  }
}

Multigraph build_graph(GraphKind kind, int n) {
  require(n >= min_parameter(kind),
          to_string(kind) + " requires n >= " + std::to_string(min_parameter(kind)));
  switch (kind) {
    case GraphKind::Circuit: {
      Multigraph g(n);
      for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
      return g;
    }
    case GraphKind::FatLink: {
      Multigraph g(2);
      for (int i = 0; i < n; ++i) g.add_edge(0, 1);
      return g;
    }
    case GraphKind::D1C: {
      Multigraph g(n);
      g.add_edge(0, 1);
      for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
      return g;
    }
    case GraphKind::DC: {
      Multigraph g(n);
      for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, (i + 1) % n);
      }
      return g;
    }
    case GraphKind::Wheel: {
      // Hub 0, rim 1..n-1. Spokes interleave with rim edges so that
      // edge-ordered recursions sweep around the wheel.
      const int rim = n - 1;
      Multigraph g(n);
      for (int i = 0; i < rim; ++i) {
        g.add_edge(0, 1 + i);
        g.add_edge(1 + i, 1 + (i + 1) % rim);
      }
      return g;
    }
    case GraphKind::H3: {
      Multigraph g(n + 2);
      for (int i = 0; i < n; ++i) {
        g.add_edge(0, 2 + i);
        g.add_edge(2 + i, 1);
      }
      return g;
    }
    case GraphKind::HW: {
      require(n % 2 == 1, "HW requires odd n");
      const int m = (n - 1) / 2;
      // Hub 0, rim vertices 1..m, spoke midpoints m+1..2m.
      Multigraph g(n);
      for (int i = 0; i < m; ++i) {
        g.add_edge(0, m + 1 + i);
        g.add_edge(m + 1 + i, 1 + i);
        g.add_edge(1 + i, 1 + (i + 1) % m);
      }
      return g;
    }
  }
  throw std::invalid_argument("unknown graph kind");
}

std::pair<Multigraph, Multigraph> dual_pair(GraphKind kind, int n) {
  switch (kind) {
    case GraphKind::Circuit:
    case GraphKind::FatLink:
      return {build_graph(GraphKind::Circuit, n), build_graph(GraphKind::FatLink, n)};
    case GraphKind::H3:
    case GraphKind::DC:
      return {build_graph(GraphKind::H3, n), build_graph(GraphKind::DC, n)};
    case GraphKind::Wheel: {
      auto g = build_graph(GraphKind::Wheel, n);
      return {g, g};
    }
    default:
      throw std::invalid_argument("no named dual pair for " + to_string(kind));
  }
}

Family parse_family(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "E") return Family::E;
  if (name == "F") return Family::F;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::E: return "E";
    case Family::F: return "F";
  }
  return "?";
}

int min_parameter(Family family) {
  switch (family) {
    case Family::A:
    case Family::B: return 3;
    case Family::E: return 2;
    case Family::F: return 5;
  }
  return 0;
}

void check_parameter(Family family, int n) {
  require(n >= min_parameter(family), "family " + to_string(family) + " requires n >= " +
                                          std::to_string(min_parameter(family)));
  if (family == Family::F) require(n % 2 == 1, "family F requires odd n");
}

Multigraph family_graph(Family family, int n) {
  check_parameter(family, n);
  switch (family) {
    case Family::A: return build_graph(GraphKind::D1C, n - 1);
    case Family::B: return build_graph(GraphKind::Wheel, n);
    case Family::E: return build_graph(GraphKind::H3, n);
    case Family::F: return build_graph(GraphKind::HW, n);
  }
  throw std::invalid_argument("unknown family");
}

LinkPresentation link_presentation(Family family, int n) {
  LinkPresentation p;
  p.family = family;
  p.n = n;
  p.graph = family_graph(family, n);
  switch (family) {
    case Family::A:
      p.writhe = (n % 2 == 1) ? -n : 4 - n;
      p.n_dark = n - 1;
      p.n_light = 3;
      p.crossings = n;
      break;
    case Family::B:
      p.writhe = 0;
      p.n_dark = n;
      p.n_light = n;
      p.crossings = 2 * (n - 1);
      break;
    case Family::E:
      p.writhe = -2 * n;
      p.n_dark = n + 2;
      p.n_light = n;
      p.crossings = 2 * n;
      break;
    case Family::F:
      p.writhe = -(n - 1) / 2;
      p.n_dark = n;
      p.n_light = (n + 1) / 2;
      p.crossings = 3 * (n - 1) / 2;
      break;
  }
  p.n_components = link_component_count(p.graph);
  return p;
}

int link_component_count(const Multigraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("link component count needs a connected graph");
  const BigInt value = abs(evaluate_exact(tutte_dc(g), BigInt(-1), BigInt(-1)));
  if (value <= 0 || (value & (value - 1)) != 0) {
    throw std::logic_error("|T(G,-1,-1)| = " + value.str() + " is not a power of two");
  }
  return 1 + static_cast<int>(msb(value));
}

}  // namespace knotzeros
