#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nearlyz {

using VertexId = std::uint32_t;

/// Unordered edge, stored with a < b.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  bool touches(VertexId v) const { return a == v || b == v; }

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Path on three vertices: left - center - right, with left < right.
struct P3Sub {
  VertexId center = 0;
  VertexId left = 0;
  VertexId right = 0;

  friend auto operator<=>(const P3Sub &, const P3Sub &) = default;
};

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices [0, n). Immutable once built; the
/// free functions below return new graphs.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws GraphError on loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edges_.size(); }

  /// Sorted lexicographically.
  const std::vector<Edge> &edges() const { return edges_; }
  /// Sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;
  bool contains(VertexId v) const { return v < order(); }

  std::size_t component_count() const;
  bool is_forest() const { return size() + component_count() == order(); }
  bool is_tree() const { return order() > 0 && is_forest() && size() + 1 == order(); }

  friend bool operator==(const Graph &x, const Graph &y) {
    return x.order() == y.order() && x.edges_ == y.edges_;
  }

private:
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
};

/// G - S with surviving vertices renumbered in increasing order.
Graph delete_vertices(const Graph &g, std::span<const VertexId> s);
Graph delete_vertices(const Graph &g, std::initializer_list<VertexId> s);

Graph add_edge(const Graph &g, Edge e);
Graph delete_edge(const Graph &g, Edge e);

/// Vertex i of the result is the i-th edge of g.edges().
Graph line_graph(const Graph &g);

/// Every P_3 subgraph having v as its center or as one of its ends.
std::vector<P3Sub> p3_containing(const Graph &g, VertexId v);

/// Components ordered by smallest original vertex, each compacted.
std::vector<Graph> connected_components(const Graph &g);

/// Component label per vertex, labels assigned in order of smallest vertex.
std::vector<std::size_t> component_labels(const Graph &g);

Graph disjoint_union(const Graph &x, const Graph &y);

/// Vertex v of g becomes perm[v] in the result.
Graph relabel(const Graph &g, std::span<const VertexId> perm);

std::vector<std::size_t> degree_sequence(const Graph &g);

std::string to_string(const Graph &g);

} // namespace nearlyz
