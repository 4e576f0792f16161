#include <catch2/catch.hpp>

#include <string>

#include "spantree/generators.hpp"
#include "spantree/graph.hpp"
#include "spantree/graph_io.hpp"

using spantree::Graph;
using spantree::parse_edge_list;
using spantree::parse_error;
using spantree::parse_graph6;
using spantree::write_edge_list;
using spantree::write_graph6;

TEST_CASE("edge list parses the documented examples", "[edgelist]") {
  Graph triangle = parse_edge_list("3 3\n0 1\n1 2\n0 2");
  CHECK(triangle == Graph(3, {{0, 1}, {1, 2}, {0, 2}}));

  Graph edgeless = parse_edge_list("2 0");
  CHECK(edgeless.n() == 2);
  CHECK(edgeless.m() == 0);
}

TEST_CASE("edge list accepts comments and blank lines", "[edgelist]") {
  Graph g = parse_edge_list("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n0 2\n\n");
  CHECK(g.m() == 3);
}

TEST_CASE("edge list errors carry line numbers", "[edgelist]") {
  SECTION("vertex index out of range") {
    try {
      parse_edge_list("3 1\n0 3");
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
  }
  SECTION("malformed header") {
    CHECK_THROWS_AS(parse_edge_list("three 3\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("3\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list(""), parse_error);
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), parse_error);
  }
  SECTION("self-loop") {
    try {
      parse_edge_list("# c\n3 2\n0 1\n2 2");
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(e.line() == 4);
      CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
  }
  SECTION("edge count mismatch") {
    CHECK_THROWS_WITH(parse_edge_list("3 3\n0 1\n1 2"),
                      Catch::Contains("edge count mismatch"));
    CHECK_THROWS_WITH(parse_edge_list("3 1\n0 1\n1 2"),
                      Catch::Contains("edge count mismatch"));
  }
}

TEST_CASE("edge list is order-insensitive", "[edgelist]") {
  Graph a = parse_edge_list("4 3\n0 1\n1 2\n2 3");
  Graph b = parse_edge_list("4 3\n2 3\n0 1\n1 2");
  CHECK(a == b);
}

TEST_CASE("edge list round trip", "[edgelist]") {
  Graph g = spantree::generate(spantree::Family::wheel, 6);
  CHECK(parse_edge_list(write_edge_list(g)) == g);
}

TEST_CASE("graph6 decodes the documented examples", "[graph6]") {
  // "D?{": n = 5; body bits 000000 111100 -> x(0,4), x(1,4), x(2,4), x(3,4):
  // the star with hub 4. Cross-checked with an independent decoder.
  Graph star = parse_graph6("D?{");
  CHECK(star == Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  CHECK(star == spantree::generate(spantree::Family::star, 5));

  CHECK(parse_graph6("A_") == Graph(2, {{0, 1}}));
  CHECK(parse_graph6("A?") == Graph(2, {}));
  CHECK(parse_graph6("@") == Graph(1, {}));
  CHECK(parse_graph6("D~{") == spantree::generate(spantree::Family::complete, 5));
}

TEST_CASE("graph6 writes canonical strings", "[graph6]") {
  CHECK(write_graph6(Graph(2, {{0, 1}})) == "A_");
  CHECK(write_graph6(Graph(1, {})) == "@");
  CHECK(write_graph6(spantree::generate(spantree::Family::complete, 5)) ==
        "D~{");
  CHECK(write_graph6(spantree::generate(spantree::Family::star, 5)) == "D?{");
}

TEST_CASE("graph6 rejects malformed input", "[graph6]") {
  CHECK_THROWS_AS(parse_graph6(""), parse_error);
  CHECK_THROWS_AS(parse_graph6("~??"), parse_error);   // multi-byte size
  CHECK_THROWS_AS(parse_graph6("A"), parse_error);     // truncated body
  CHECK_THROWS_AS(parse_graph6("A_?"), parse_error);   // trailing garbage
  CHECK_THROWS_AS(parse_graph6("A\x1f"), parse_error); // byte below 63
  CHECK_THROWS_AS(parse_graph6("?"), parse_error);     // n = 0
  CHECK_THROWS_AS(parse_graph6("B@"), parse_error);    // nonzero padding bits
}

TEST_CASE("graph6 write rejects n > 62", "[graph6]") {
  CHECK_THROWS_AS(write_graph6(Graph(63, {})), std::domain_error);
}

TEST_CASE("graph6 round trip is the identity", "[graph6]") {
  spantree::SplitMix64 rng(31337);
  for (int round = 0; round < 120; ++round) {
    int n = 1 + static_cast<int>(rng.next_below(62));
    double p = static_cast<double>(rng.next_below(11)) / 10.0;
    Graph g = spantree::random_graph(n, p, rng.next());
    Graph back = parse_graph6(write_graph6(g));
    CHECK(back == g);
  }
  // A trailing newline from a file read is tolerated.
  CHECK(parse_graph6("D?{\n") == spantree::generate(spantree::Family::star, 5));
}
