#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "nearlyz/graph.hpp"

namespace nearlyz::testing {

/// Lexicographically smallest sorted edge list over all relabelings. Only for
/// small n (n! permutations).
inline std::vector<Edge> brute_canonical(const Graph &g) {
  std::vector<VertexId> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> e;
    for (const Edge &x : g.edges())
      e.emplace_back(perm[x.a], perm[x.b]);
    std::sort(e.begin(), e.end());
    if (first || e < best) {
      best = e;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      e.emplace_back(a, b);
  return Graph(n, e);
}

} // namespace nearlyz::testing
