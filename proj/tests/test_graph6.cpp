#include <doctest.h>

#include <sstream>

#include "nearlyz/graph6.hpp"
#include "support.hpp"

using namespace nearlyz;
using nearlyz::testing::path;

TEST_CASE("graph6 reference encodings") {
  CHECK(to_graph6(path(4)) == "Ch");
  CHECK(to_graph6(path(2)) == "A_");
  CHECK(to_graph6(Graph(3)) == "B?");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph(5, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4)})) == "Ds_");
  CHECK(to_graph6(Graph(12, {Edge(0, 11), Edge(3, 7), Edge(5, 9)})) == "K????_?@??O?");
}

TEST_CASE("graph6 decoding") {
  CHECK(parse_graph6("D?{") == Graph(5, {Edge(0, 4), Edge(1, 4), Edge(2, 4), Edge(3, 4)}));
  CHECK(parse_graph6(">>graph6<<Ch\n") == path(4));
  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 round trip") {
  for (std::size_t n = 0; n <= 20; ++n) {
    std::vector<Edge> e;
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if ((a * 7 + b * 3) % 5 == 0)
          e.emplace_back(a, b);
    Graph g(n, e);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 errors carry offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("~?@"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Chx"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C\x01"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError); // padding bit set
  try {
    parse_graph6("Ch!");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(to_graph6(Graph(63)), GraphError);
}

TEST_CASE("graph6 streams and edge lists") {
  std::istringstream in(">>graph6<<Ch\n\nA_\n");
  auto gs = parse_graph6_stream(in);
  REQUIRE(gs.size() == 2);
  CHECK(gs[1] == path(2));
  auto el = parse_edge_list("4\n0 1\n1 2\n2 3\n\n2\n0 1\n");
  REQUIRE(el.size() == 2);
  CHECK(el[0] == path(4));
  CHECK(el[1] == path(2));
  CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 5\n"), ParseError);
}
