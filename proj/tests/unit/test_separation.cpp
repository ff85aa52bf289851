#include <random>

#include "doctest.h"
#include "../oracles.hpp"
#include "tanglekit/fixtures.hpp"
#include "tanglekit/grid.hpp"
#include "tanglekit/separation.hpp"

using namespace tanglekit;

TEST_CASE("is_separation examples") {
  const Graph p = fixtures::path_graph(3);
  CHECK(is_separation(p, {0, 1}, {1, 2}));
  CHECK_FALSE(is_separation(p, {0}, {1, 2}));
  CHECK_FALSE(is_separation(p, {0, 1}, {2}));
  CHECK_FALSE(is_separation(p, {0}, {2}));  // vertex 1 uncovered
  CHECK(is_separation(p, {}, {0, 1, 2}));
  CHECK_FALSE(is_separation(p, {0, 5}, {0, 1, 2}));
}

TEST_CASE("enumeration small counts") {
  CHECK(enumerate_separations(Graph(1, {}), 1).size() == 3);
  CHECK(enumerate_separations(Graph(2, {{0, 1}}), 2).size() == 7);
  CHECK(enumerate_separations(Graph(2, {{0, 1}}), 0).size() == 2);

  const auto connected = enumerate_separations(fixtures::cycle_graph(5), 0);
  REQUIRE(connected.size() == 2);
  CHECK(connected[0].side_a().empty());
  CHECK(connected[1].side_b().empty());
}

TEST_CASE("enumeration matches the 3^n oracle") {
  const GridGraph w2 = make_grid(2), w3 = make_grid(3);
  CHECK(enumerate_separations(w2.graph(), 1) == oracle::separations(w2.graph(), 1));
  CHECK(enumerate_separations(w3.graph(), 2) == oracle::separations(w3.graph(), 2));
  CHECK(enumerate_separations(w3.graph(), 9) == oracle::separations(w3.graph(), 9));

  std::mt19937 rng(3);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v});
    const Graph g(n, edges);
    const int k = trial % 4;
    const auto got = enumerate_separations(g, k);
    CHECK(got == oracle::separations(g, k));
    for (const auto& s : got) {
      CHECK(s.order() <= k);
      CHECK(std::binary_search(got.begin(), got.end(), s.reversed()));
    }
  }
}

TEST_CASE("enumeration is invariant under relabelling") {
  const Graph g = make_grid(3).graph();
  const std::vector<Vertex> perm{4, 8, 0, 6, 2, 7, 1, 5, 3};
  std::vector<Edge> relabelled;
  for (const auto& e : g.edges()) relabelled.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  const Graph h(9, relabelled);
  for (int k = 0; k <= 3; ++k) CHECK(enumerate_separations(g, k).size() == enumerate_separations(h, k).size());
}

TEST_CASE("threads do not change the result") {
  const Graph g = make_grid(3).graph();
  CHECK(enumerate_separations(g, 3, {16, 1}) == enumerate_separations(g, 3, {16, 4}));
}

TEST_CASE("enumeration cap") {
  try {
    enumerate_separations(Graph(17, {}), 1);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InstanceTooLarge);
  }
  CHECK(enumerate_separations(fixtures::path_graph(17), 0, {17, 1}).size() == 2);
}

TEST_CASE("separation value semantics") {
  const Separation s({2, 0, 1}, {1, 2, 3});
  CHECK(s.side_a() == VertexSet{0, 1, 2});
  CHECK(s.separator() == VertexSet{1, 2});
  CHECK(s.order() == 2);
  CHECK(s.reversed().side_a() == VertexSet{1, 2, 3});
  CHECK(format_separation(s).find("0,1,2") != std::string::npos);
}
