#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nearlyz/bigcount.hpp"
#include "nearlyz/graph.hpp"

namespace nearlyz {

/// Size limits for the exhaustive oracles.
struct OracleCaps {
  static constexpr std::size_t kDefault = 24;
  static constexpr std::size_t kHardLimit = 40;

  std::size_t max_edges = kDefault;    // zk_oracle walks 2^m edge subsets
  std::size_t max_vertices = kDefault; // sigma1_oracle walks 2^n vertex subsets

  /// Defaults overridden by NEARLYZ_ORACLE_CAP when set.
  static OracleCaps from_env();
  static OracleCaps uniform(std::size_t cap);
};

class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a method does not apply to its input (e.g. tree DP on a graph
/// with a cycle).
class NotApplicable : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Number of unordered pairs of edges in s sharing an endpoint.
/// Throws GraphError if an edge of s is not in g.
std::uint64_t count_adjacent_pairs(const Graph &g, std::span<const Edge> s);

/// histogram[k] = Z_k(g) for k = 0 .. C(m,2). Sums to 2^m.
std::vector<std::uint64_t> zk_histogram(const Graph &g, const OracleCaps &caps = {});

BigCount zk_oracle(const Graph &g, std::size_t k, const OracleCaps &caps = {});

/// Vertex subsets whose induced subgraph has exactly one edge.
BigCount sigma1_oracle(const Graph &g, const OracleCaps &caps = {});

/// Hosoya index: matchings including the empty one.
BigCount z0(const Graph &g);

/// Z_1 via the vertex-deletion recursion, memoised per call.
BigCount z1_recursive(const Graph &g);

struct ForestCounts {
  BigCount z0;
  BigCount z1;
};

/// Linear-time DP over a forest. Throws NotApplicable on a cycle.
ForestCounts forest_counts(const Graph &g);
BigCount z1_tree_dp(const Graph &g);

/// Same DP in checked 64-bit arithmetic; nullopt on overflow.
std::optional<std::uint64_t> z1_tree_dp_u64(const Graph &g);

// Closed forms, evaluated through Fibonacci/Lucas numbers.
BigCount fibonacci(std::size_t n);
BigCount lucas(std::size_t n);

BigCount z0_path_closed(std::size_t n);
BigCount z1_path_closed(std::size_t n);
BigCount sigma1_path_closed(std::size_t n);
/// n >= 3, else std::domain_error.
BigCount z1_cycle_closed(std::size_t n);
BigCount sigma1_cycle_closed(std::size_t n);
/// Z_1(K_{1,n-1}), n >= 3.
BigCount z1_star_closed(std::size_t n);
/// Z_1(B^3_n), n >= 4.
BigCount z1_broom3_closed(std::size_t n);

/// Both sides of the vertex-deletion recursion at pivot z, by oracle.
struct LemmaRecSides {
  BigCount lhs;
  BigCount rhs;
};
LemmaRecSides lemma_rec_sides(const Graph &g, VertexId z, const OracleCaps &caps = {});
bool check_lemma_rec(const Graph &g, VertexId z, const OracleCaps &caps = {});

} // namespace nearlyz
