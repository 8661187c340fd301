#include "knotzeros/tutte.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace knotzeros {

namespace {

// Union-find with undo, for the include/exclude enumeration.
class RollbackSets {
 public:
  explicit RollbackSets(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int a) const {
    while (parent_[a] != a) a = parent_[a];
    return a;
  }

  // Returns the absorbed root, or -1 if already joined.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return b;
  }

  void undo(int absorbed) {
    const int root = parent_[absorbed];
    size_[root] -= size_[absorbed];
    parent_[absorbed] = absorbed;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

class SubgraphCounter {
 public:
  SubgraphCounter(const Multigraph& g, const std::vector<bool>& marked)
      : g_(g),
        marked_(marked),
        sets_(g.vertex_count()),
        e_(g.edge_count()),
        counts_(static_cast<std::size_t>(g.vertex_count() + 1) * (e_ + 1) * (e_ + 1), 0) {}

  void run() { visit(0, g_.vertex_count(), 0, 0); }

  std::map<SubgraphClass, std::uint64_t> result() const {
    std::map<SubgraphClass, std::uint64_t> out;
    for (int k = 0; k <= g_.vertex_count(); ++k)
      for (int e = 0; e <= e_; ++e)
        for (int m = 0; m <= e_; ++m)
          if (auto c = counts_[index(k, e, m)]) out[{k, e, m}] = c;
    return out;
  }

 private:
  std::size_t index(int k, int e, int m) const {
    return (static_cast<std::size_t>(k) * (e_ + 1) + e) * (e_ + 1) + m;
  }

  void visit(int i, int k, int edges, int marks) {
    if (i == e_) {
      ++counts_[index(k, edges, marks)];
      return;
    }
    visit(i + 1, k, edges, marks);
    const int mark = (!marked_.empty() && marked_[i]) ? 1 : 0;
    const Edge& e = g_.edges()[i];
    const int absorbed = sets_.unite(e.u, e.v);
    if (absorbed >= 0) {
      visit(i + 1, k - 1, edges + 1, marks + mark);
      sets_.undo(absorbed);
    } else {
      visit(i + 1, k, edges + 1, marks + mark);
    }
  }

  const Multigraph& g_;
  const std::vector<bool>& marked_;
  RollbackSets sets_;
  int e_;
  std::vector<std::uint64_t> counts_;
};

// Coefficients of (z - 1)^a, ascending.
std::vector<BigInt> shifted_binomial(int a) {
  std::vector<BigInt> c(a + 1);
  BigInt binom = 1;
  for (int i = 0; i <= a; ++i) {
    c[i] = ((a - i) % 2 == 0) ? binom : BigInt(-binom);
    binom = binom * (a - i) / (i + 1);
  }
  return c;
}

// Graph reduced for the deletion-contraction recursion: loops and bridges
// removed (their factors recorded) and vertices relabelled by first
// appearance in edge order, isolated vertices dropped.
struct Peeled {
  Multigraph graph;
  int loops = 0;
  int bridges = 0;
};

Peeled peel(const Multigraph& g) {
  Peeled out;
  std::vector<Edge> kept;
  kept.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      ++out.loops;
    } else {
      kept.push_back(e);
    }
  }
  Multigraph plain(g.vertex_count(), kept);
  const auto bridge = bridge_flags(plain);

  std::vector<int> rep(g.vertex_count());
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](int a) {
    while (rep[a] != a) a = rep[a] = rep[rep[a]];
    return a;
  };
  std::vector<Edge> rest;
  for (int i = 0; i < plain.edge_count(); ++i) {
    const Edge& e = plain.edges()[i];
    if (bridge[i]) {
      ++out.bridges;
      int a = find(e.u), b = find(e.v);
      rep[std::max(a, b)] = std::min(a, b);
    } else {
      rest.push_back(e);
    }
  }
  std::vector<int> label(g.vertex_count(), -1);
  int next = 0;
  for (auto& e : rest) {
    int a = find(e.u), b = find(e.v);
    if (label[a] < 0) label[a] = next++;
    if (label[b] < 0) label[b] = next++;
    e = {label[a], label[b]};
  }
  out.graph = Multigraph(next, std::move(rest));
  return out;
}

std::string memo_key(const Multigraph& g) {
  std::string key;
  key.reserve(g.edges().size() * 4);
  for (const auto& e : g.edges()) {
    key.push_back(static_cast<char>(e.u & 0xff));
    key.push_back(static_cast<char>(e.u >> 8));
    key.push_back(static_cast<char>(e.v & 0xff));
    key.push_back(static_cast<char>(e.v >> 8));
  }
  return key;
}

class DeletionContraction {
 public:
  BivarPoly operator()(const Multigraph& g) {
    Peeled p = peel(g);
    BivarPoly factor = BivarPoly::monomial({p.bridges, p.loops});
    if (p.graph.edge_count() == 0) return factor;
    return factor * core(p.graph);
  }

 private:
  // g has no loops, no bridges and no isolated vertices.
  const BivarPoly& core(const Multigraph& g) {
    const std::string key = memo_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BivarPoly result = (*this)(delete_edge(g, 0)) + (*this)(contract_edge(g, 0));
    return memo_.emplace(key, std::move(result)).first->second;
  }

  std::unordered_map<std::string, BivarPoly> memo_;
};

}  // namespace

std::map<SubgraphClass, std::uint64_t> classify_spanning_subgraphs(const Multigraph& g,
                                                                   const std::vector<bool>& marked) {
  if (g.edge_count() > kMaxEnumerationEdges) {
    throw std::invalid_argument("subgraph enumeration limited to " +
                                std::to_string(kMaxEnumerationEdges) + " edges");
  }
  if (!marked.empty() && static_cast<int>(marked.size()) != g.edge_count()) {
    throw std::invalid_argument("mark vector size mismatch");
  }
  SubgraphCounter counter(g, marked);
  counter.run();
  return counter.result();
}

BivarPoly tutte_bruteforce(const Multigraph& g) {
  const int k = component_count(g);
  const int n = g.vertex_count();
  std::map<std::pair<int, int>, BigInt> by_power;
  for (const auto& [cls, count] : classify_spanning_subgraphs(g)) {
    const int cycles = cls.edges + cls.components - n;
    by_power[{cls.components - k, cycles}] += count;
  }
  BivarPoly t;
  for (const auto& [powers, count] : by_power) {
    const auto cx = shifted_binomial(powers.first);
    const auto cy = shifted_binomial(powers.second);
    for (int i = 0; i <= powers.first; ++i)
      for (int j = 0; j <= powers.second; ++j) t.add_term({i, j}, count * cx[i] * cy[j]);
  }
  return t;
}

BivarPoly tutte_dc(const Multigraph& g) {
  DeletionContraction dc;
  return dc(g);
}

BivarPoly tutte_family_closed(GraphKind kind, int n) {
  if (n < min_parameter(kind)) {
    throw std::invalid_argument(to_string(kind) + " requires n >= " +
                                std::to_string(min_parameter(kind)));
  }
  const BivarPoly x = var_x();
  const BivarPoly y = var_y();
  const BivarPoly one = BivarPoly::constant(1);
  switch (kind) {
    case GraphKind::D1C: {
      BivarPoly inner = y;
      for (int j = 1; j <= n - 2; ++j) inner += power(x, j);
      return (one + y) * inner + power(x, n - 1);
    }
    case GraphKind::Wheel: {
      // s_m = lambda_+^m + lambda_-^m with lambda_+ + lambda_- = 1+x+y and
      // lambda_+ lambda_- = xy.
      const BivarPoly trace = one + x + y;
      const BivarPoly det = x * y;
      BivarPoly prev = BivarPoly::constant(2), cur = trace;
      for (int m = 2; m <= n - 1; ++m) {
        BivarPoly next = trace * cur - det * prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return x * y - x - y - one + cur;
    }
    case GraphKind::H3: {
      // ((xy-x-y)(1+x)^n + (x+y)^n)/(y-1) with the division carried out:
      // (x-1)(1+x)^n + sum_k (x+y)^k (1+x)^(n-1-k).
      const BivarPoly a = one + x;
      const BivarPoly b = x + y;
      BivarPoly sum;
      for (int k = 0; k <= n - 1; ++k) sum += power(b, k) * power(a, n - 1 - k);
      return (x - one) * power(a, n) + sum;
    }
    case GraphKind::HW: {
      if (n % 2 == 0) throw std::invalid_argument("HW requires odd n");
      const int m = (n - 1) / 2;
      const BivarPoly trace = one + x.scaled(2) + x * x + y;
      const BivarPoly det = x * (x + one) * (x + y);
      BivarPoly prev = BivarPoly::constant(2), cur = trace;
      for (int j = 2; j <= m; ++j) {
        BivarPoly next = trace * cur - det * prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return (x * y - x - y - one) * power(x + one, m) + cur;
    }
    default:
      throw std::invalid_argument("no closed form for " + to_string(kind));
  }
}

BivarLaurent signed_tutte(const SignedMultigraph& sg, int primed_sign) {
  if (primed_sign != 1 && primed_sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const Multigraph& g = sg.graph();
  std::vector<bool> marked(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) marked[i] = sg.signs()[i] == primed_sign;
  const int k = component_count(g);
  const int n = g.vertex_count();
  BivarLaurent t;
  for (const auto& [cls, count] : classify_spanning_subgraphs(g, marked)) {
    const int a = cls.components - k;
    const int b = cls.edges + cls.components - n;
    const auto cx = shifted_binomial(a);
    const auto cy = shifted_binomial(b);
    const BigInt base = (cls.marked % 2 == 0) ? BigInt(count) : BigInt(-BigInt(count));
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) t.add_term({i, j - cls.marked}, base * cx[i] * cy[j]);
  }
  return t;
}

Complex potts_direct(const Multigraph& g, Complex q, Complex v) {
  Complex z = 0.0;
  for (const auto& [cls, count] : classify_spanning_subgraphs(g)) {
    z += static_cast<double>(count) * std::pow(q, cls.components) * std::pow(v, cls.edges);
  }
  return z;
}

Complex potts_via_tutte(const Multigraph& g, const BivarPoly& tutte, Complex q, Complex v) {
  if (v == Complex(0.0)) throw std::domain_error("Tutte route needs v != 0");
  const Complex x = 1.0 + q / v;
  const Complex y = v + 1.0;
  return std::pow(q / v, component_count(g)) * std::pow(v, g.vertex_count()) *
         evaluate(tutte, x, y);
}

Complex potts_via_tutte(const Multigraph& g, Complex q, Complex v) {
  return potts_via_tutte(g, tutte_dc(g), q, v);
}

UniPoly chromatic(const Multigraph& g, const BivarPoly& tutte) {
  const int k = component_count(g);
  const int n = g.vertex_count();
  UniPoly p = substitute_affine_x(tutte, 1, -1, 0);
  const BigInt sign = ((k + n) % 2 == 0) ? 1 : -1;
  return p * UniPoly::monomial(k, sign);
}

UniPoly chromatic(const Multigraph& g) { return chromatic(g, tutte_dc(g)); }

}  // namespace knotzeros
