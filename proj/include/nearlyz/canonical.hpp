#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nearlyz/graph.hpp"

namespace nearlyz {

/// Isomorphism-invariant identity of a free tree: the depth sequence (preorder)
/// of the tree rooted at its centroid with children in canonical order. For a
/// bicentroidal tree the smaller of the two rootings is used.
struct CanonicalTreeCode {
  std::vector<std::uint32_t> code;

  std::string to_string() const;
  friend auto operator<=>(const CanonicalTreeCode &, const CanonicalTreeCode &) = default;
};

/// Throws GraphError if g is not a tree.
CanonicalTreeCode canonical_tree_code(const Graph &g);

/// Canonical depth sequence of g rooted at `root` (g must be a tree).
std::vector<std::uint32_t> rooted_tree_code(const Graph &g, VertexId root);

/// One or two centroid vertices of a tree, ascending.
std::vector<VertexId> tree_centroids(const Graph &g);

} // namespace nearlyz
