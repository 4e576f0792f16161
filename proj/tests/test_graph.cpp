#include <catch2/catch.hpp>

#include <numeric>

#include "spantree/generators.hpp"
#include "spantree/graph.hpp"

using spantree::Graph;

TEST_CASE("construction validates simple-graph invariants", "[graph]") {
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);

  Graph g(4, {{2, 0}, {0, 2}, {1, 0}});
  CHECK(g.n() == 4);
  CHECK(g.m() == 2);  // duplicates collapse, orientation is canonical
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("graph equality is structural", "[graph]") {
  Graph a(3, {{0, 1}, {1, 2}});
  Graph b(3, {{1, 2}, {1, 0}});
  Graph c(3, {{0, 1}, {0, 2}});
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("degree sequence satisfies the handshake lemma", "[graph]") {
  spantree::SplitMix64 rng(5150);
  for (int round = 0; round < 50; ++round) {
    int n = 1 + static_cast<int>(rng.next_below(20));
    Graph g = spantree::random_graph(n, 0.4, rng.next());
    auto deg = spantree::degree_sequence(g);
    CHECK(std::accumulate(deg.begin(), deg.end(), 0) == 2 * g.m());
    for (int d : deg)
      CHECK(d <= n - 1);
  }
}

TEST_CASE("is_connected", "[graph]") {
  CHECK(spantree::is_connected(spantree::generate(spantree::Family::complete, 4)));
  CHECK(spantree::is_connected(Graph(1, {})));
  // Two disjoint triangles.
  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(spantree::is_connected(two_triangles));
  CHECK_FALSE(spantree::is_connected(Graph(2, {})));
}

TEST_CASE("is_complete", "[graph]") {
  CHECK(spantree::is_complete(spantree::generate(spantree::Family::complete, 5)));
  CHECK_FALSE(spantree::is_complete(spantree::generate(spantree::Family::cycle, 4)));
  CHECK(spantree::is_complete(Graph(1, {})));
  CHECK(spantree::is_complete(spantree::generate(spantree::Family::cycle, 3)));
}

TEST_CASE("complete implies connected", "[graph]") {
  for (int n = 1; n <= 8; ++n) {
    Graph g = spantree::generate(spantree::Family::complete, n);
    REQUIRE(spantree::is_complete(g));
    CHECK(spantree::is_connected(g));
  }
}
