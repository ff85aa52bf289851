#include <random>

#include "doctest.h"
#include "../oracles.hpp"
#include "tanglekit/fixtures.hpp"
#include "tanglekit/graph.hpp"
#include "tanglekit/grid.hpp"

using namespace tanglekit;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph construction") {
  const Graph g(2, {{0, 1}});
  CHECK(g.degree_sequence() == std::vector<int>{1, 1});
  CHECK(g.edge_count() == 1);

  const Graph doubled(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(doubled.edge_count() == 1);

  try {
    Graph(1, {{0, 0}});
    FAIL("loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopEdge);
  }
  try {
    Graph(2, {{0, 2}});
    FAIL("out of range accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VertexOutOfRange);
  }
}

TEST_CASE("set helpers stay canonical") {
  CHECK(make_set({3, 1, 3, 2}) == VertexSet{1, 2, 3});
  CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
  CHECK(set_intersection({1, 3}, {2, 3}) == VertexSet{3});
  CHECK(set_difference({1, 2, 3}, {2}) == VertexSet{1, 3});
  CHECK(is_subset({1, 3}, {1, 2, 3}));
  CHECK_FALSE(is_subset({4}, {1, 2, 3}));
}

TEST_CASE("components") {
  CHECK(components(fixtures::path_graph(3), {1}) == std::vector<VertexSet>{{0}, {2}});
  CHECK(components(fixtures::cycle_graph(4)).size() == 1);

  const GridGraph w = make_grid(3);
  const auto parts = components(w.graph(), w.column(2));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == VertexSet{0, 3, 6});
  CHECK(parts[1] == VertexSet{2, 5, 8});

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, 9, 0.25);
    const VertexSet removed{static_cast<Vertex>(trial % 9)};
    const auto cs = components(g, removed);
    VertexSet all = removed;
    for (const auto& c : cs) {
      CHECK(set_intersection(all, c).empty());
      all = set_union(all, c);
      CHECK(induces_connected(g, c));
      for (Vertex v : c)
        for (Vertex w : g.neighbors(v))
          CHECK((set_contains(c, w) || set_contains(removed, w)));
    }
    CHECK(all == g.all_vertices());
  }
}

TEST_CASE("subgraphs keep parent ids") {
  const Graph g = fixtures::cycle_graph(5);
  const Subgraph s = delete_vertices(g, {0});
  CHECK(s.graph.vertex_count() == 4);
  CHECK(s.graph.edge_count() == 3);
  CHECK(s.lift({0, 3}) == VertexSet{1, 4});
  const Subgraph t = induced_subgraph(g, {0, 1, 3});
  CHECK(t.graph.edge_count() == 1);
}

TEST_CASE("disjoint paths examples") {
  const Graph edge(2, {{0, 1}});
  CHECK(max_disjoint_paths(edge, {0}, {1}).size() == 1);

  const GridGraph w = make_grid(3);
  const auto paths = max_disjoint_paths(w.graph(), w.column(1), w.column(3));
  CHECK(paths.size() == 3);
  VertexSet used;
  for (const Path& p : paths) {
    CHECK(p.valid_in(w.graph()));
    CHECK(set_intersection(used, p.vertex_set()).empty());
    used = set_union(used, p.vertex_set());
  }

  const Graph star(3, {{0, 1}, {1, 2}});
  const auto through = max_disjoint_paths(star, {0}, {2});
  REQUIRE(through.size() == 1);
  CHECK(through[0].vertices() == std::vector<Vertex>{0, 1, 2});
  CHECK(max_disjoint_paths(star, {0}, {2}, {1}).empty());

  // A shared terminal is a trivial path.
  const auto trivial = max_disjoint_paths(star, {1}, {1});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].size() == 1);
}

TEST_CASE("brute separator examples") {
  const GridGraph w = make_grid(3);
  CHECK(brute_min_separator(w.graph(), w.column(1), w.column(3)) == 3);
  CHECK(brute_min_separator(Graph(2, {{0, 1}}), {0}, {1}) == 1);
  CHECK(brute_min_separator(Graph(2, {}), {0}, {1}) == 0);
  try {
    brute_min_separator(Graph(17, {}), {0}, {1});
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InstanceTooLarge);
  }
}

TEST_CASE("Menger against an independent cut oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + trial % 7;
    const Graph g = random_graph(rng, n, 0.35);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const VertexSet s = make_set({order[0], order[1]});
    const VertexSet t = make_set({order[2], order[3]});
    const auto paths = max_disjoint_paths(g, s, t);
    const int cut = oracle::min_cut(g, s, t);
    CHECK(static_cast<int>(paths.size()) == cut);
    CHECK(brute_min_separator(g, s, t) == cut);
    for (const Path& p : paths) {
      CHECK(p.valid_in(g));
      CHECK(set_contains(s, p.front()));
      CHECK(set_contains(t, p.back()));
    }
  }
}

TEST_CASE("connectivity against brute force") {
  CHECK(vertex_connectivity(fixtures::complete_graph(6)) == 5);
  CHECK(vertex_connectivity(fixtures::cycle_graph(6)) == 2);
  CHECK(vertex_connectivity(fixtures::path_graph(4)) == 1);
  CHECK(min_degree(fixtures::complete_graph(6)) == 5);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 4 + trial % 6, 0.55);
    CHECK(vertex_connectivity(g) == oracle::connectivity(g));
  }
}
