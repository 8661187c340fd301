#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "knotzeros/graph.hpp"
#include "knotzeros/polynomial.hpp"

namespace knotzeros {

/// Largest edge count accepted by the 2^e subgraph enumerations.
inline constexpr int kMaxEnumerationEdges = 24;

/// Statistics of one spanning subgraph G' of G.
struct SubgraphClass {
  int components = 0;  // k(G')
  int edges = 0;       // e(G')
  int marked = 0;      // number of marked edges in G'
  auto operator<=>(const SubgraphClass&) const = default;
};

/// Counts spanning subgraphs by (k(G'), e(G'), marked edges). `marked` may be
/// empty (no marks). Throws std::invalid_argument above the edge guard.
std::map<SubgraphClass, std::uint64_t> classify_spanning_subgraphs(
    const Multigraph& g, const std::vector<bool>& marked = {});

/// Tutte polynomial by direct summation over spanning subgraphs.
BivarPoly tutte_bruteforce(const Multigraph& g);

/// Tutte polynomial by memoized deletion-contraction.
BivarPoly tutte_dc(const Multigraph& g);

/// Closed forms for D1C_n, Wh_n, H3_n and HW_n. Power sums of the conjugate
/// eigenvalue pairs come from integer linear recurrences.
BivarPoly tutte_family_closed(GraphKind kind, int n);

/// Subgraph sum with the extra factor (-1/y)^{e'(G')}, where e'(G') counts
/// the edges of G' whose sign is `primed_sign`.
BivarLaurent signed_tutte(const SignedMultigraph& g, int primed_sign);

/// Potts partition function by the cluster sum over spanning subgraphs.
Complex potts_direct(const Multigraph& g, Complex q, Complex v);
/// Potts partition function through (x-1)^k (y-1)^n T(G,x,y) with
/// x = 1 + q/v, y = v + 1. Throws std::domain_error for v = 0.
Complex potts_via_tutte(const Multigraph& g, Complex q, Complex v);
Complex potts_via_tutte(const Multigraph& g, const BivarPoly& tutte, Complex q, Complex v);

/// Chromatic polynomial (-q)^k (-1)^n T(G, 1-q, 0), exact.
UniPoly chromatic(const Multigraph& g);
UniPoly chromatic(const Multigraph& g, const BivarPoly& tutte);

}  // namespace knotzeros
