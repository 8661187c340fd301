#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "knotzeros/graph.hpp"
#include "knotzeros/oracles.hpp"
#include "knotzeros/tutte.hpp"

using namespace knotzeros;

namespace {

Multigraph fat_link(int n) { return build_graph(GraphKind::FatLink, n); }

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm).same_as(b)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<int> family_parameters(Family f, int max_n) {
  std::vector<int> out;
  for (int n = min_parameter(f); n <= max_n; ++n) {
    if (f == Family::F && n % 2 == 0) continue;
    out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_SUITE("graphcore") {

TEST_CASE("construction validates endpoints and signs") {
  CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Multigraph(2, {{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedMultigraph(fat_link(2), {1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedMultigraph(fat_link(2), {1, 0}), std::invalid_argument);
  const SignedMultigraph sg(fat_link(3), {1, -1, -1});
  CHECK(sg.count_sign(1) == 1);
  CHECK(sg.count_sign(-1) == 2);
}

TEST_CASE("canonical form ignores edge order and orientation") {
  const Multigraph a(3, {{0, 1}, {2, 1}, {0, 0}});
  const Multigraph b(3, {{0, 0}, {1, 2}, {1, 0}});
  CHECK(a.same_as(b));
  CHECK_FALSE(a == b);
  CHECK_FALSE(a.same_as(Multigraph(3, {{0, 1}, {2, 1}, {1, 1}})));
}

TEST_CASE("delete_edge") {
  const Multigraph c3 = build_graph(GraphKind::Circuit, 3);
  for (int e = 0; e < 3; ++e) {
    const Multigraph path = delete_edge(c3, e);
    CHECK(path.vertex_count() == 3);
    CHECK(path.edge_count() == 2);
    CHECK(is_connected(path));
    CHECK(cyclomatic(path) == 0);
  }
  CHECK(delete_edge(fat_link(3), 1).same_as(fat_link(2)));
  const Multigraph loop(1, {{0, 0}});
  const Multigraph bare = delete_edge(loop, 0);
  CHECK(bare.vertex_count() == 1);
  CHECK(bare.edge_count() == 0);
  CHECK_THROWS_AS(delete_edge(c3, 3), std::out_of_range);
  CHECK_THROWS_AS(delete_edge(c3, -1), std::out_of_range);
}

TEST_CASE("contract_edge") {
  const Multigraph c3 = build_graph(GraphKind::Circuit, 3);
  for (int e = 0; e < 3; ++e) CHECK(contract_edge(c3, e).same_as(fat_link(2)));
  const Multigraph fl2 = contract_edge(fat_link(2), 0);
  CHECK(fl2.same_as(Multigraph(1, {{0, 0}})));
  const Multigraph k2 = contract_edge(Multigraph(2, {{0, 1}}), 0);
  CHECK(k2.vertex_count() == 1);
  CHECK(k2.edge_count() == 0);
  CHECK_THROWS_AS(contract_edge(Multigraph(1, {{0, 0}}), 0), std::invalid_argument);
  CHECK_THROWS_AS(contract_edge(c3, 5), std::out_of_range);
}

TEST_CASE("component_count and cyclomatic") {
  const Multigraph c4 = build_graph(GraphKind::Circuit, 4);
  CHECK(component_count(c4) == 1);
  CHECK(cyclomatic(c4) == 1);
  CHECK(component_count(fat_link(3)) == 1);
  CHECK(cyclomatic(fat_link(3)) == 2);
  const Multigraph empty(3);
  CHECK(component_count(empty) == 3);
  CHECK(cyclomatic(empty) == 0);
  CHECK(component_count(Multigraph(0)) == 0);
}

TEST_CASE("bridges") {
  const Multigraph g(4, {{0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 3}});
  CHECK(bridge_flags(g) == std::vector<bool>{true, false, false, true, false});
  for (bool b : bridge_flags(build_graph(GraphKind::Wheel, 6))) CHECK_FALSE(b);
}

TEST_CASE("build_graph sizes") {
  for (int n = 2; n <= 9; ++n) {
    const auto c = build_graph(GraphKind::Circuit, n);
    CHECK(c.vertex_count() == n);
    CHECK(c.edge_count() == n);
    const auto fl = build_graph(GraphKind::FatLink, n);
    CHECK(fl.vertex_count() == 2);
    CHECK(fl.edge_count() == n);
    const auto d1c = build_graph(GraphKind::D1C, n);
    CHECK(d1c.vertex_count() == n);
    CHECK(d1c.edge_count() == n + 1);
    const auto dc = build_graph(GraphKind::DC, n);
    CHECK(dc.vertex_count() == n);
    CHECK(dc.edge_count() == 2 * n);
    const auto h3 = build_graph(GraphKind::H3, n);
    CHECK(h3.vertex_count() == n + 2);
    CHECK(h3.edge_count() == 2 * n);
    if (n >= 3) {
      const auto wh = build_graph(GraphKind::Wheel, n);
      CHECK(wh.vertex_count() == n);
      CHECK(wh.edge_count() == 2 * (n - 1));
    }
    if (n >= 5 && n % 2 == 1) {
      const auto hw = build_graph(GraphKind::HW, n);
      CHECK(hw.vertex_count() == n);
      CHECK(hw.edge_count() == 3 * (n - 1) / 2);
      CHECK(is_connected(hw));
    }
  }
}

TEST_CASE("build_graph named coincidences") {
  CHECK(build_graph(GraphKind::D1C, 2).same_as(fat_link(3)));
  CHECK(build_graph(GraphKind::DC, 2).same_as(fat_link(4)));
  CHECK(isomorphic(build_graph(GraphKind::H3, 2), build_graph(GraphKind::Circuit, 4)));
  CHECK(isomorphic(build_graph(GraphKind::Wheel, 3), build_graph(GraphKind::D1C, 3)));
  const Multigraph hw5 = build_graph(GraphKind::HW, 5);
  CHECK(hw5.vertex_count() == 5);
  CHECK(hw5.edge_count() == 6);
}

TEST_CASE("build_graph rejects small parameters") {
  CHECK_THROWS_AS(build_graph(GraphKind::Circuit, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(GraphKind::H3, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(GraphKind::Wheel, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(GraphKind::HW, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(GraphKind::HW, 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_kind("K5"), std::invalid_argument);
  CHECK(parse_graph_kind("Wheel") == GraphKind::Wheel);
}

TEST_CASE("dual_pair") {
  const auto [c4, fl4] = dual_pair(GraphKind::Circuit, 4);
  CHECK(c4.same_as(build_graph(GraphKind::Circuit, 4)));
  CHECK(fl4.same_as(fat_link(4)));
  const auto [h, dc] = dual_pair(GraphKind::H3, 3);
  CHECK(h.same_as(build_graph(GraphKind::H3, 3)));
  CHECK(dc.same_as(build_graph(GraphKind::DC, 3)));
  const auto [w, w_star] = dual_pair(GraphKind::Wheel, 5);
  CHECK(w.same_as(w_star));
  CHECK_THROWS_AS(dual_pair(GraphKind::HW, 5), std::invalid_argument);
  // Euler: n + n* = e + 2.
  for (int n = 3; n <= 8; ++n) {
    for (GraphKind kind : {GraphKind::Circuit, GraphKind::H3, GraphKind::Wheel}) {
      const auto [g, d] = dual_pair(kind, n);
      CHECK(g.edge_count() == d.edge_count());
      CHECK(g.vertex_count() + d.vertex_count() == g.edge_count() + 2);
    }
  }
}

TEST_CASE("link_presentation named members") {
  const LinkPresentation a9 = link_presentation(Family::A, 9);
  CHECK(a9.graph.same_as(build_graph(GraphKind::D1C, 8)));
  CHECK(a9.writhe == -9);
  CHECK(a9.n_dark == 8);
  CHECK(a9.n_light == 3);
  CHECK(a9.crossings == 9);
  CHECK(a9.n_components == 1);

  const LinkPresentation b5 = link_presentation(Family::B, 5);
  CHECK(b5.graph.same_as(build_graph(GraphKind::Wheel, 5)));
  CHECK(b5.writhe == 0);
  CHECK(b5.crossings == 8);

  const LinkPresentation e2 = link_presentation(Family::E, 2);
  CHECK(isomorphic(e2.graph, build_graph(GraphKind::Circuit, 4)));
  CHECK(e2.writhe == -4);
  CHECK(e2.n_dark == 4);
  CHECK(e2.n_light == 2);
  CHECK(e2.crossings == 4);
  CHECK(e2.n_components == 2);

  const LinkPresentation a4 = link_presentation(Family::A, 4);
  CHECK(a4.writhe == 0);
  const LinkPresentation f7 = link_presentation(Family::F, 7);
  CHECK(f7.writhe == -3);
  CHECK(f7.n_light == 4);
  CHECK(f7.crossings == 9);
}

TEST_CASE("link_presentation rejects invalid parameters") {
  CHECK_THROWS_AS(link_presentation(Family::A, 2), std::invalid_argument);
  CHECK_THROWS_AS(link_presentation(Family::B, 2), std::invalid_argument);
  CHECK_THROWS_AS(link_presentation(Family::E, 1), std::invalid_argument);
  CHECK_THROWS_AS(link_presentation(Family::F, 3), std::invalid_argument);
  CHECK_THROWS_AS(link_presentation(Family::F, 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("G"), std::invalid_argument);
}

TEST_CASE("diagram counts agree with the graph") {
  for (Family f : {Family::A, Family::B, Family::E, Family::F}) {
    for (int n : family_parameters(f, 20)) {
      if (n < 3) continue;
      CAPTURE(to_string(f));
      CAPTURE(n);
      const LinkPresentation p = link_presentation(f, n);
      CHECK(p.crossings == p.graph.edge_count());
      CHECK(p.n_dark == p.graph.vertex_count());
      CHECK(p.n_dark + p.n_light == p.crossings + 2);
      CHECK(is_connected(p.graph));
    }
  }
}

TEST_CASE("delete and contract commute with relabeling") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int e = 1 + static_cast<int>(rng() % 8);
    const Multigraph g = oracle::random_multigraph(rng, n, e, true);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Multigraph h = relabel(g, perm);
    for (int i = 0; i < e; ++i) {
      CHECK(relabel(delete_edge(g, i), perm).same_as(delete_edge(h, i)));
      if (!g.edge(i).is_loop()) CHECK(isomorphic(contract_edge(g, i), contract_edge(h, i)));
    }
  }
}

TEST_CASE("link_component_count") {
  CHECK(link_component_count(build_graph(GraphKind::D1C, 2)) == 1);
  CHECK(link_component_count(build_graph(GraphKind::Wheel, 4)) == 3);
  CHECK(link_component_count(build_graph(GraphKind::H3, 4)) == 4);
  CHECK_THROWS_AS(link_component_count(Multigraph(2)), std::invalid_argument);
}

TEST_CASE("knot families have one component and E_n has n") {
  for (int n : family_parameters(Family::A, 21)) CHECK(link_presentation(Family::A, n).n_components == 1);
  for (int n : family_parameters(Family::F, 21)) CHECK(link_presentation(Family::F, n).n_components == 1);
  for (int n = 2; n <= 10; ++n) CHECK(link_presentation(Family::E, n).n_components == n);
}

TEST_CASE("component count matches the bicycle dimension") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int e = std::max(n - 1, 1) + static_cast<int>(rng() % 7);
    const Multigraph g = oracle::random_connected_multigraph(rng, n, e, true);
    CHECK(link_component_count(g) == 1 + oracle::bicycle_dimension(g));
  }
}

}  // TEST_SUITE
