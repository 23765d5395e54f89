#include <doctest.h>

#include "nearlyz/graph.hpp"
#include "support.hpp"

using namespace nearlyz;
using nearlyz::testing::path;

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(3, {Edge(0, 0)}), GraphError);
  CHECK_THROWS_AS(Graph(3, {Edge(0, 3)}), GraphError);
  CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), GraphError);
  Graph g(4, {Edge(2, 1), Edge(0, 1)});
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.edges().front() == Edge(0, 1));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_THROWS_AS(g.neighbors(4), GraphError);
}

TEST_CASE("forest and tree predicates") {
  CHECK(path(5).is_tree());
  CHECK(Graph(3).is_forest());
  CHECK_FALSE(Graph(3).is_tree());
  CHECK_FALSE(Graph(0).is_tree());
  Graph triangle(3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)});
  CHECK_FALSE(triangle.is_forest());
  CHECK(Graph(5, {Edge(0, 1), Edge(3, 4)}).component_count() == 3);
}

TEST_CASE("vertex deletion compacts labels") {
  Graph g = path(5);
  Graph h = delete_vertices(g, {2});
  CHECK(h.order() == 4);
  CHECK(h == Graph(4, {Edge(0, 1), Edge(2, 3)}));
  CHECK(delete_vertices(g, {0, 4}) == path(3));
  CHECK_THROWS_AS(delete_vertices(g, {7}), GraphError);
}

TEST_CASE("edge edits") {
  Graph g = path(3);
  CHECK(add_edge(g, Edge(0, 2)).size() == 3);
  CHECK_THROWS_AS(add_edge(g, Edge(0, 1)), GraphError);
  CHECK(delete_edge(g, Edge(1, 2)) == Graph(3, {Edge(0, 1)}));
  CHECK_THROWS_AS(delete_edge(g, Edge(0, 2)), GraphError);
}

TEST_CASE("line graph") {
  Graph star(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
  CHECK(line_graph(star) == Graph(3, {Edge(0, 1), Edge(0, 2), Edge(1, 2)}));
  CHECK(line_graph(path(4)) == path(3));
  CHECK(line_graph(Graph(3)).order() == 0);
}

TEST_CASE("P3 subgraphs through a vertex") {
  // 0-1-2-3: vertex 1 is the center of 0-1-2 and an end of 1-2-3.
  auto p = p3_containing(path(4), 1);
  REQUIRE(p.size() == 2);
  CHECK(p[0] == P3Sub{1, 0, 2});
  CHECK(p[1] == P3Sub{2, 1, 3});
  CHECK(p3_containing(Graph(3, {Edge(0, 1)}), 0).empty());
}

TEST_CASE("components, union and relabel") {
  Graph g(6, {Edge(4, 5), Edge(0, 2)});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == Graph(2, {Edge(0, 1)}));
  CHECK(comps[1].order() == 1);
  CHECK(component_labels(g) == std::vector<std::size_t>{0, 1, 0, 2, 3, 3});
  Graph u = disjoint_union(path(2), path(3));
  CHECK(u == Graph(5, {Edge(0, 1), Edge(2, 3), Edge(3, 4)}));
  std::vector<VertexId> perm{2, 0, 1};
  CHECK(relabel(path(3), perm) == Graph(3, {Edge(0, 2), Edge(0, 1)}));
  std::vector<VertexId> bad{0, 0, 1};
  CHECK_THROWS_AS(relabel(path(3), bad), GraphError);
  CHECK(degree_sequence(g) == std::vector<std::size_t>{1, 1, 1, 1, 0, 0});
}
