#include "nearlyz/invariants.hpp"

#include <array>

namespace nearlyz {

namespace {

// Per rooted subtree, counts of edge subsets indexed by
//   q: adjacent pairs inside the subtree (0 or 1; more is discarded)
//   t: selected edges from the subtree root to its children (0, 1 or 2)
// stored at q * 3 + t.
template <class Count> using State = std::array<Count, 6>;

template <class Count> void absorb_child(State<Count> &st, const State<Count> &child) {
  const Count skip0 = child[0] + child[1] + child[2];
  const Count skip1 = child[3] + child[4] + child[5];
  // Selecting the edge to the child adds t_child pairs at the child.
  const Count take0 = child[0];
  const Count take1 = child[1] + child[3];

  const std::array<Count, 2> skip{skip0, skip1};
  const std::array<Count, 2> take{take0, take1};
  State<Count> out{};
  for (int q = 0; q < 2; ++q) {
    for (int t = 0; t < 3; ++t) {
      const Count &cur = st[q * 3 + t];
      if (cur == Count(0))
        continue;
      for (int qc = 0; q + qc < 2; ++qc)
        out[(q + qc) * 3 + t] += cur * skip[qc];
      // The new root edge also pairs with the t edges already at the root.
      if (t < 2)
        for (int qc = 0; q + qc + t < 2; ++qc)
          out[(q + qc + t) * 3 + t + 1] += cur * take[qc];
    }
  }
  st = out;
}

template <class Count> std::array<Count, 2> forest_dp(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<State<Count>> state(n);
  std::vector<VertexId> parent(n);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<VertexId> stack;

  Count total0 = Count(1);
  Count total1 = Count(0);
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root])
      continue;
    order.clear();
    seen[root] = true;
    parent[root] = root;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          stack.push_back(w);
        }
      }
    }
    for (VertexId v : order) {
      state[v] = State<Count>{};
      state[v][0] = Count(1);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (*it != root)
        absorb_child(state[parent[*it]], state[*it]);

    const auto &s = state[root];
    const Count c0 = s[0] + s[1] + s[2];
    const Count c1 = s[3] + s[4] + s[5];
    total1 = total0 * c1 + total1 * c0;
    total0 = total0 * c0;
  }
  return {total0, total1};
}

void require_forest(const Graph &g) {
  if (!g.is_forest())
    throw NotApplicable("tree DP requires a forest, got " + to_string(g));
}

} // namespace

std::optional<std::uint64_t> z1_tree_dp_u64(const Graph &g) {
  require_forest(g);
  try {
    return forest_dp<CheckedU64>(g)[1].value();
  } catch (const CheckedU64::Overflow &) {
    return std::nullopt;
  }
}

ForestCounts forest_counts(const Graph &g) {
  require_forest(g);
  try {
    auto small = forest_dp<CheckedU64>(g);
    return {BigCount(small[0].value()), BigCount(small[1].value())};
  } catch (const CheckedU64::Overflow &) {
    auto big = forest_dp<BigCount>(g);
    return {big[0], big[1]};
  }
}

BigCount z1_tree_dp(const Graph &g) { return forest_counts(g).z1; }

} // namespace nearlyz
