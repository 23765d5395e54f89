#include "nearlyz/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace nearlyz {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : edges_(edges.begin(), edges.end()), adj_(n) {
  for (const Edge &e : edges_) {
    if (e.a == e.b)
      throw GraphError("loop at vertex " + std::to_string(e.a));
    if (e.b >= n)
      throw GraphError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " out of range for n=" +
                       std::to_string(n));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw GraphError("duplicate edge " + std::to_string(dup->a) + "-" + std::to_string(dup->b));
  for (const Edge &e : edges_) {
    adj_[e.a].push_back(e.b);
    adj_[e.b].push_back(e.a);
  }
  for (auto &nb : adj_)
    std::sort(nb.begin(), nb.end());
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (v >= order())
    throw GraphError("unknown vertex " + std::to_string(v));
  return adj_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= order() || v >= order())
    return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::component_count() const {
  auto labels = component_labels(*this);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<std::size_t> component_labels(const Graph &g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.order(), unset);
  std::vector<VertexId> stack;
  std::size_t next = 0;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (label[s] != unset)
      continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (label[w] == unset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

Graph delete_vertices(const Graph &g, std::span<const VertexId> s) {
  std::vector<bool> gone(g.order(), false);
  for (VertexId v : s) {
    if (!g.contains(v))
      throw GraphError("unknown vertex " + std::to_string(v));
    gone[v] = true;
  }
  std::vector<VertexId> remap(g.order(), 0);
  VertexId next = 0;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!gone[v])
      remap[v] = next++;
  std::vector<Edge> kept;
  kept.reserve(g.size());
  for (const Edge &e : g.edges())
    if (!gone[e.a] && !gone[e.b])
      kept.emplace_back(remap[e.a], remap[e.b]);
  return Graph(next, kept);
}

Graph delete_vertices(const Graph &g, std::initializer_list<VertexId> s) {
  return delete_vertices(g, std::span<const VertexId>(s.begin(), s.size()));
}

Graph add_edge(const Graph &g, Edge e) {
  if (g.has_edge(e.a, e.b))
    throw GraphError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " already present");
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Graph(g.order(), edges);
}

Graph delete_edge(const Graph &g, Edge e) {
  if (e.a == e.b)
    throw GraphError("loop at vertex " + std::to_string(e.a));
  std::vector<Edge> edges = g.edges();
  auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end())
    throw GraphError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " not present");
  edges.erase(it);
  return Graph(g.order(), edges);
}

Graph line_graph(const Graph &g) {
  const auto &edges = g.edges();
  // incident[v] lists indices into edges
  std::vector<std::vector<VertexId>> incident(g.order());
  for (VertexId i = 0; i < edges.size(); ++i) {
    incident[edges[i].a].push_back(i);
    incident[edges[i].b].push_back(i);
  }
  std::vector<Edge> out;
  for (const auto &list : incident)
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        out.emplace_back(list[i], list[j]);
  // two simple-graph edges share at most one endpoint, so no duplicates arise
  return Graph(edges.size(), out);
}

std::vector<P3Sub> p3_containing(const Graph &g, VertexId v) {
  auto nb = g.neighbors(v);
  std::vector<P3Sub> out;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      out.push_back({v, nb[i], nb[j]});
  for (VertexId c : nb)
    for (VertexId w : g.neighbors(c))
      if (w != v)
        out.push_back({c, std::min(v, w), std::max(v, w)});
  return out;
}

std::vector<Graph> connected_components(const Graph &g) {
  auto label = component_labels(g);
  std::size_t count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<VertexId> local(g.order());
  std::vector<std::size_t> sizes(count, 0);
  for (VertexId v = 0; v < g.order(); ++v)
    local[v] = static_cast<VertexId>(sizes[label[v]]++);
  std::vector<std::vector<Edge>> edges(count);
  for (const Edge &e : g.edges())
    edges[label[e.a]].emplace_back(local[e.a], local[e.b]);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c)
    out.emplace_back(sizes[c], edges[c]);
  return out;
}

Graph disjoint_union(const Graph &x, const Graph &y) {
  std::vector<Edge> edges = x.edges();
  auto shift = static_cast<VertexId>(x.order());
  for (const Edge &e : y.edges())
    edges.emplace_back(e.a + shift, e.b + shift);
  return Graph(x.order() + y.order(), edges);
}

Graph relabel(const Graph &g, std::span<const VertexId> perm) {
  if (perm.size() != g.order())
    throw GraphError("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge &e : g.edges())
    edges.emplace_back(perm[e.a], perm[e.b]);
  return Graph(g.order(), edges);
}

std::vector<std::size_t> degree_sequence(const Graph &g) {
  std::vector<std::size_t> d(g.order());
  for (VertexId v = 0; v < g.order(); ++v)
    d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::string to_string(const Graph &g) {
  std::ostringstream os;
  os << "Graph(n=" << g.order() << ", {";
  bool first = true;
  for (const Edge &e : g.edges()) {
    os << (first ? "" : ",") << e.a << '-' << e.b;
    first = false;
  }
  os << "})";
  return os.str();
}

} // namespace nearlyz
