#include "nearlyz/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

namespace nearlyz {

OracleCaps OracleCaps::uniform(std::size_t cap) {
  if (cap == 0 || cap > kHardLimit)
    throw std::invalid_argument("oracle cap must be in [1, " + std::to_string(kHardLimit) + "], got " +
                                std::to_string(cap));
  return OracleCaps{cap, cap};
}

OracleCaps OracleCaps::from_env() {
  const char *raw = std::getenv("NEARLYZ_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0')
    return {};
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(raw, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0')
    throw std::invalid_argument(std::string("NEARLYZ_ORACLE_CAP is not an integer: ") + raw);
  return uniform(value);
}

std::uint64_t count_adjacent_pairs(const Graph &g, std::span<const Edge> s) {
  std::vector<Edge> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw GraphError("edge subset lists an edge twice");
  std::vector<std::uint64_t> incident(g.order(), 0);
  for (const Edge &e : sorted) {
    if (!g.has_edge(e.a, e.b))
      throw GraphError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " not in graph");
    ++incident[e.a];
    ++incident[e.b];
  }
  std::uint64_t pairs = 0;
  for (std::uint64_t t : incident)
    pairs += t * (t - (t > 0 ? 1 : 0)) / 2;
  return pairs;
}

std::vector<std::uint64_t> zk_histogram(const Graph &g, const OracleCaps &caps) {
  const std::size_t m = g.size();
  if (m > caps.max_edges || m > OracleCaps::kHardLimit)
    throw CapExceeded("zk oracle: graph has " + std::to_string(m) + " edges, cap is " +
                      std::to_string(std::min(caps.max_edges, OracleCaps::kHardLimit)));

  std::vector<std::uint64_t> hist(m * (m - (m > 0 ? 1 : 0)) / 2 + 1, 0);
  std::vector<std::uint32_t> incident(g.order(), 0);
  std::vector<bool> chosen(m, false);
  const auto &edges = g.edges();
  std::uint64_t pairs = 0;
  hist[0] = 1;
  // Gray-code walk: step i flips edge ctz(i), so each step is O(1).
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    const Edge &e = edges[bit];
    if (!chosen[bit]) {
      pairs += incident[e.a] + incident[e.b];
      ++incident[e.a];
      ++incident[e.b];
    } else {
      --incident[e.a];
      --incident[e.b];
      pairs -= incident[e.a] + incident[e.b];
    }
    chosen[bit] = !chosen[bit];
    ++hist[pairs];
  }
  return hist;
}

BigCount zk_oracle(const Graph &g, std::size_t k, const OracleCaps &caps) {
  auto hist = zk_histogram(g, caps);
  return k < hist.size() ? BigCount(hist[k]) : BigCount(0);
}

BigCount sigma1_oracle(const Graph &g, const OracleCaps &caps) {
  const std::size_t n = g.order();
  if (n > caps.max_vertices || n > OracleCaps::kHardLimit)
    throw CapExceeded("sigma1 oracle: graph has " + std::to_string(n) + " vertices, cap is " +
                      std::to_string(std::min(caps.max_vertices, OracleCaps::kHardLimit)));
  std::vector<std::uint64_t> adj(n, 0);
  for (const Edge &e : g.edges()) {
    adj[e.a] |= std::uint64_t{1} << e.b;
    adj[e.b] |= std::uint64_t{1} << e.a;
  }
  std::uint64_t in = 0;
  std::uint64_t induced = 0;
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto v = static_cast<std::size_t>(std::countr_zero(i));
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (in & bit) {
      in ^= bit;
      induced -= static_cast<std::uint64_t>(std::popcount(adj[v] & in));
    } else {
      induced += static_cast<std::uint64_t>(std::popcount(adj[v] & in));
      in |= bit;
    }
    if (induced == 1)
      ++count;
  }
  return BigCount(count);
}

LemmaRecSides lemma_rec_sides(const Graph &g, VertexId z, const OracleCaps &caps) {
  LemmaRecSides sides;
  sides.lhs = zk_oracle(g, 1, caps);
  sides.rhs = zk_oracle(delete_vertices(g, {z}), 1, caps);
  for (VertexId v : g.neighbors(z))
    sides.rhs += zk_oracle(delete_vertices(g, {z, v}), 1, caps);
  for (const P3Sub &p : p3_containing(g, z))
    sides.rhs += zk_oracle(delete_vertices(g, {p.center, p.left, p.right}), 0, caps);
  return sides;
}

bool check_lemma_rec(const Graph &g, VertexId z, const OracleCaps &caps) {
  auto sides = lemma_rec_sides(g, z, caps);
  return sides.lhs == sides.rhs;
}

} // namespace nearlyz
