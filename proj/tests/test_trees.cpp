#include <doctest.h>

#include <set>

#include "nearlyz/canonical.hpp"
#include "nearlyz/graph6.hpp"
#include "nearlyz/sampling.hpp"
#include "nearlyz/tree_gen.hpp"
#include "support.hpp"

using namespace nearlyz;

namespace {

// Classes of labelled trees of order n, through every Pruefer sequence.
std::set<CanonicalTreeCode> pruefer_classes(std::size_t n) {
  std::set<CanonicalTreeCode> out;
  if (n <= 2) {
    out.insert(canonical_tree_code(nearlyz::testing::path(n)));
    return out;
  }
  std::vector<VertexId> seq(n - 2, 0);
  for (;;) {
    out.insert(canonical_tree_code(tree_from_pruefer(seq)));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n)
      seq[i++] = 0;
    if (i == seq.size())
      return out;
  }
}

// Classes of order n + 1 from classes of order n by attaching one leaf.
std::set<CanonicalTreeCode> extend_by_leaf(const std::vector<Graph> &trees) {
  std::set<CanonicalTreeCode> out;
  for (const Graph &t : trees) {
    const auto n = static_cast<VertexId>(t.order());
    for (VertexId v = 0; v < n; ++v)
      out.insert(canonical_tree_code(add_edge(Graph(n + 1, t.edges()), Edge(v, n))));
  }
  return out;
}

} // namespace

TEST_CASE("free-tree counts against labelled-tree deduplication, n <= 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto classes = pruefer_classes(n);
    std::set<CanonicalTreeCode> enumerated;
    for (const Graph &t : enumerate_free_trees(n))
      enumerated.insert(canonical_tree_code(t));
    CHECK(enumerated == classes);
    CHECK(count_free_trees(n) == classes.size());
  }
}

TEST_CASE("free-tree counts against leaf extension, 9 <= n <= 12") {
  std::vector<Graph> previous = enumerate_free_trees(8);
  for (std::size_t n = 9; n <= 12; ++n) {
    auto classes = extend_by_leaf(previous);
    previous = enumerate_free_trees(n);
    std::set<CanonicalTreeCode> enumerated;
    for (const Graph &t : previous)
      enumerated.insert(canonical_tree_code(t));
    CHECK(enumerated.size() == previous.size());
    CHECK(enumerated == classes);
  }
}

TEST_CASE("known counts") {
  const std::uint64_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (std::size_t n = 1; n <= 14; ++n)
    CHECK(count_free_trees(n) == expected[n - 1]);
  CHECK_THROWS_AS(FreeTreeEnumerator(0), std::out_of_range);
  CHECK_THROWS_AS(FreeTreeEnumerator(25), std::out_of_range);
}

TEST_CASE("stream order: path first, star last") {
  for (std::size_t n = 4; n <= 10; ++n) {
    auto trees = enumerate_free_trees(n);
    CHECK(describe_tree(trees.front()) == "P_" + std::to_string(n));
    CHECK(describe_tree(trees.back()) == "K_{1," + std::to_string(n - 1) + "}");
  }
}

TEST_CASE("slices and skip") {
  auto all = enumerate_free_trees(10);
  auto a = enumerate_free_trees(10, 0, 10);
  auto b = enumerate_free_trees(10, 10, 106);
  REQUIRE(a.size() + b.size() == all.size());
  a.insert(a.end(), b.begin(), b.end());
  CHECK(a == all);
  CHECK(enumerate_free_trees(10, 100, 200).size() == 6);
  CHECK(enumerate_free_trees(10, 200, 300).empty());

  FreeTreeEnumerator it(9);
  CHECK(it.skip(5) == 5);
  REQUIRE(it.next());
  CHECK(it.index() == 5);
  CHECK(it.graph() == enumerate_free_trees(9)[5]);
  CHECK(it.skip(1000) == 41);
  CHECK_FALSE(it.next());
}

TEST_CASE("level sequences") {
  FreeTreeEnumerator it(5);
  REQUIRE(it.next());
  CHECK(std::vector<int>(it.level_sequence().begin(), it.level_sequence().end()) ==
        std::vector<int>{0, 1, 2, 1, 2});
  const int star[] = {0, 1, 1, 1};
  CHECK(graph_from_level_sequence(star) == make_family(FamilySpec::star(4)));
}

TEST_CASE("families") {
  CHECK(make_family(FamilySpec::parse("path:4")) == nearlyz::testing::path(4));
  CHECK(make_family(FamilySpec::cycle(5)).size() == 5);
  Graph broom = make_family(FamilySpec::broom(9, 3));
  CHECK(degree_sequence(broom) == std::vector<std::size_t>{7, 2, 1, 1, 1, 1, 1, 1, 1});
  CHECK(describe_tree(broom) == "B^3_9");
  Graph spider = make_family(FamilySpec::parse("star_like:3,3,3"));
  CHECK(spider.order() == 10);
  CHECK(describe_tree(spider) == "[P_3,P_3,P_3]");
  CHECK(star_like_branches(make_family(FamilySpec::star_like({1, 5, 2}))) ==
        std::vector<std::size_t>{5, 2, 1});
  CHECK_FALSE(star_like_branches(nearlyz::testing::path(5)).has_value());
  CHECK(FamilySpec::parse("broom:9:3").to_string() == "broom:9:3");
  CHECK_THROWS_AS(FamilySpec::parse("wheel:5"), GraphError);
  CHECK_THROWS_AS(FamilySpec::parse("path:x"), GraphError);
  CHECK_THROWS_AS(make_family(FamilySpec::cycle(2)), GraphError);
  CHECK_THROWS_AS(make_family(FamilySpec::broom(5, 2)), GraphError);
  CHECK(describe_tree(Graph(3)) == "forest");
  CHECK(describe_tree(make_family(FamilySpec::cycle(3))) == "graph");
}

TEST_CASE("attaching branches") {
  RootedTree p = rooted_path(8);
  RootedTree joined = attach_branches(std::span<const RootedTree>(&p, 1));
  CHECK(canonical_tree_code(joined.tree) == canonical_tree_code(nearlyz::testing::path(9)));
  std::vector<RootedTree> three{rooted_path(1), rooted_path(1), rooted_path(6)};
  CHECK(describe_tree(attach_branches(three).tree) == "[P_6,P_1,P_1]");
}

TEST_CASE("pseudo-leaves") {
  // Spider [2,1,1]: hub 0 with leaves 1, 2 and path 0-3-4.
  Graph t = make_family(FamilySpec::star_like({1, 1, 2}));
  PseudoLeaf p = find_pseudo_leaf(t);
  CHECK(t.degree(p.z) == 1);
  CHECK(t.has_edge(p.v, p.z));
  CHECK(p.degree == t.degree(p.v));
  std::size_t inner = 0;
  for (VertexId w : t.neighbors(p.v))
    inner += t.degree(w) > 1 ? 1 : 0;
  CHECK(inner <= 1);
  PseudoLeaf k2 = find_pseudo_leaf(Graph(3, {Edge(1, 2)}));
  CHECK(k2.degree == 1);
  CHECK(k2.u == k2.z);
  CHECK_THROWS_AS(find_pseudo_leaf(Graph(3)), GraphError);
  CHECK_THROWS_AS(find_pseudo_leaf(make_family(FamilySpec::cycle(4))), GraphError);
}

TEST_CASE("random generators are reproducible") {
  Sampler a(5);
  Sampler b(5);
  for (int i = 0; i < 20; ++i) {
    CHECK(a.tree(9) == b.tree(9));
    CHECK(a.graph(7, 6) == b.graph(7, 6));
  }
  Sampler c(1);
  for (int i = 0; i < 50; ++i) {
    CHECK(c.tree(12).is_tree());
    CHECK(c.forest(12).is_forest());
    CHECK(c.graph(6, 15).size() == 15);
  }
  CHECK_THROWS_AS(c.graph(4, 7), std::invalid_argument);
}
