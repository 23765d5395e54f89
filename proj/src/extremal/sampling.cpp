#include "nearlyz/sampling.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

namespace nearlyz {

std::uint64_t Sampler::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi)
    throw std::invalid_argument("Sampler::uniform: empty range");
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0})
    return rng_();
  const std::uint64_t bound = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do
    x = rng_();
  while (x >= limit);
  return lo + x % bound;
}

Graph Sampler::graph(std::size_t n, std::size_t m) {
  std::vector<Edge> pool;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      pool.emplace_back(a, b);
  if (m > pool.size())
    throw std::invalid_argument("Sampler::graph: too many edges for the order");
  for (std::size_t i = 0; i < m; ++i)
    std::swap(pool[i], pool[uniform(i, pool.size() - 1)]);
  pool.resize(m);
  return Graph(n, pool);
}

Graph Sampler::tree(std::size_t n) {
  if (n <= 2)
    return n == 2 ? Graph(2, {Edge(0, 1)}) : Graph(n);
  std::vector<VertexId> seq(n - 2);
  for (auto &x : seq)
    x = static_cast<VertexId>(uniform(0, n - 1));
  return tree_from_pruefer(seq);
}

Graph Sampler::forest(std::size_t n) {
  Graph t = tree(n);
  std::vector<Edge> kept;
  for (const Edge &e : t.edges())
    if (uniform(0, 2) != 0)
      kept.push_back(e);
  return Graph(n, kept);
}

Graph tree_from_pruefer(const std::vector<VertexId> &seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (VertexId x : seq) {
    if (x >= n)
      throw std::invalid_argument("Pruefer entry out of range");
    ++degree[x];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v)
    if (degree[v] == 1)
      leaves.push(v);
  std::vector<Edge> edges;
  for (VertexId x : seq) {
    VertexId leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1)
      leaves.push(x);
  }
  VertexId a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph(n, edges);
}

} // namespace nearlyz
