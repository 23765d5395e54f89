#include "nearlyz/invariants.hpp"

#include <algorithm>
#include <unordered_map>

#include "nearlyz/graph6.hpp"
#include "nearlyz/tree_gen.hpp"

namespace nearlyz {

namespace {

std::string memo_key(const Graph &g) {
  return g.order() <= kGraph6MaxOrder ? to_graph6(g) : to_string(g);
}

Graph strip_isolated(const Graph &g) {
  std::vector<VertexId> isolated;
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      isolated.push_back(v);
  return isolated.empty() ? g : delete_vertices(g, isolated);
}

/// Memo tables live for one top-level call.
class Recursion {
public:
  BigCount z0(const Graph &g) {
    BigCount product(1);
    for (const Graph &c : connected_components(g)) {
      if (c.size() == 0)
        continue;
      product *= c.is_forest() ? forest_counts(c).z0 : z0_connected(c);
    }
    return product;
  }

  BigCount z1(const Graph &input) {
    Graph g = strip_isolated(input);
    if (g.size() < 2)
      return BigCount(0);
    std::string key = memo_key(g);
    if (auto it = z1_memo_.find(key); it != z1_memo_.end())
      return it->second;

    BigCount result;
    if (g.is_forest()) {
      PseudoLeaf p = find_pseudo_leaf(g);
      if (p.degree >= 2) {
        // Leaf z of pseudo-leaf v; u is v's largest-degree neighbour, the
        // other d - 2 neighbours are leaves.
        std::vector<VertexId> closed_minus_u{p.v};
        for (VertexId w : g.neighbors(p.v))
          if (w != p.u)
            closed_minus_u.push_back(w);
        result = z1(delete_vertices(g, {p.z})) + z1(delete_vertices(g, {p.z, p.v})) +
                 z0(delete_vertices(g, {p.z, p.v, p.u})) +
                 BigCount(p.degree - 2) * z0(delete_vertices(g, closed_minus_u));
      } else {
        result = expand(g, p.z);
      }
    } else {
      VertexId pivot = 0;
      for (VertexId v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(pivot))
          pivot = v;
      result = expand(g, pivot);
    }
    z1_memo_.emplace(std::move(key), result);
    return result;
  }

private:
  // Z_1(G) = Z_1(G-z) + sum_{v in N(z)} Z_1(G-z-v) + sum_{P in P3(z)} Z_0(G-P)
  BigCount expand(const Graph &g, VertexId z) {
    BigCount total = z1(delete_vertices(g, {z}));
    for (VertexId v : g.neighbors(z))
      total += z1(delete_vertices(g, {z, v}));
    for (const P3Sub &p : p3_containing(g, z))
      total += z0(delete_vertices(g, {p.center, p.left, p.right}));
    return total;
  }

  // Z_0(G) = Z_0(G-e) + Z_0(G-u-w) on an edge e = uw at a maximum-degree vertex.
  BigCount z0_connected(const Graph &g) {
    std::string key = memo_key(g);
    if (auto it = z0_memo_.find(key); it != z0_memo_.end())
      return it->second;
    VertexId u = 0;
    for (VertexId v = 1; v < g.order(); ++v)
      if (g.degree(v) > g.degree(u))
        u = v;
    VertexId w = g.neighbors(u).front();
    BigCount result = z0(delete_edge(g, Edge(u, w))) + z0(delete_vertices(g, {u, w}));
    z0_memo_.emplace(std::move(key), result);
    return result;
  }

  std::unordered_map<std::string, BigCount> z0_memo_;
  std::unordered_map<std::string, BigCount> z1_memo_;
};

} // namespace

BigCount z0(const Graph &g) { return Recursion().z0(g); }

BigCount z1_recursive(const Graph &g) { return Recursion().z1(g); }

} // namespace nearlyz
