#include "nearlyz/canonical.hpp"

#include <algorithm>

namespace nearlyz {

namespace {

struct RootedOrder {
  std::vector<VertexId> order;  // preorder from the root
  std::vector<VertexId> parent; // parent[root] == root
};

RootedOrder root_at(const Graph &g, VertexId root) {
  RootedOrder r;
  r.parent.assign(g.order(), root);
  r.order.reserve(g.order());
  std::vector<VertexId> stack{root};
  std::vector<bool> seen(g.order(), false);
  seen[root] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    r.order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        r.parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return r;
}

void require_tree(const Graph &g) {
  if (!g.is_tree())
    throw GraphError("canonical code requires a tree, got " + to_string(g));
}

} // namespace

std::vector<VertexId> tree_centroids(const Graph &g) {
  require_tree(g);
  const std::size_t n = g.order();
  auto rooted = root_at(g, 0);
  std::vector<std::size_t> subtree(n, 1);
  for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it)
    if (*it != 0)
      subtree[rooted.parent[*it]] += subtree[*it];

  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    std::size_t heaviest = n - subtree[v];
    for (VertexId w : g.neighbors(v))
      if (w != 0 && rooted.parent[w] == v)
        heaviest = std::max(heaviest, subtree[w]);
    if (2 * heaviest <= n)
      out.push_back(v);
  }
  return out;
}

std::vector<std::uint32_t> rooted_tree_code(const Graph &g, VertexId root) {
  require_tree(g);
  auto rooted = root_at(g, root);
  std::vector<std::vector<std::uint32_t>> code(g.order());
  for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
    VertexId v = *it;
    std::vector<std::vector<std::uint32_t> *> kids;
    for (VertexId w : g.neighbors(v))
      if (w != root && rooted.parent[w] == v)
        kids.push_back(&code[w]);
    std::sort(kids.begin(), kids.end(), [](const auto *x, const auto *y) { return *x < *y; });
    auto &mine = code[v];
    mine.push_back(0);
    for (auto *k : kids) {
      for (std::uint32_t d : *k)
        mine.push_back(d + 1);
      k->clear();
      k->shrink_to_fit();
    }
  }
  return std::move(code[root]);
}

CanonicalTreeCode canonical_tree_code(const Graph &g) {
  auto centroids = tree_centroids(g);
  CanonicalTreeCode best{rooted_tree_code(g, centroids.front())};
  if (centroids.size() == 2) {
    CanonicalTreeCode other{rooted_tree_code(g, centroids.back())};
    best = std::min(best, other);
  }
  return best;
}

std::string CanonicalTreeCode::to_string() const {
  std::string s;
  for (std::uint32_t d : code) {
    if (!s.empty())
      s.push_back(' ');
    s += std::to_string(d);
  }
  return s;
}

} // namespace nearlyz
