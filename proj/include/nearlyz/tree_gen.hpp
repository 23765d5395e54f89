#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nearlyz/graph.hpp"

namespace nearlyz {

inline constexpr std::size_t kMaxEnumerationOrder = 24;

/// Stream over all free trees of order n, one per isomorphism class.
///
/// Trees are produced as level sequences of the tree rooted at its center,
/// in decreasing lexicographic order (the path comes first, the star last).
/// The stream is deterministic, so index ranges of it can be processed
/// independently and concatenated.
class FreeTreeEnumerator {
public:
  explicit FreeTreeEnumerator(std::size_t n);

  /// Advances to the next tree; returns false once the stream is exhausted.
  /// The first call positions the stream on tree 0.
  bool next();
  /// Advances by up to k trees; returns the number actually skipped.
  std::uint64_t skip(std::uint64_t k);

  /// Index of the current tree in the stream.
  std::uint64_t index() const { return index_; }
  std::size_t order() const { return n_; }
  std::span<const int> level_sequence() const { return layout_; }
  Graph graph() const;

private:
  bool advance();

  std::size_t n_;
  std::vector<int> layout_;
  std::uint64_t index_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Builds the tree described by a level sequence (vertex i is position i).
Graph graph_from_level_sequence(std::span<const int> levels);

std::vector<Graph> enumerate_free_trees(std::size_t n);
/// Trees with stream index in [first, last).
std::vector<Graph> enumerate_free_trees(std::size_t n, std::uint64_t first, std::uint64_t last);
std::uint64_t count_free_trees(std::size_t n);

enum class FamilyKind { path, cycle, star, broom, star_like };

/// Constructive description of a named graph family member.
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::size_t n = 0;
  std::size_t handle = 0;                  // broom: order k of the path P_k
  std::vector<std::size_t> branches;       // star_like: branch lengths

  static FamilySpec path(std::size_t n) { return {FamilyKind::path, n, 0, {}}; }
  static FamilySpec cycle(std::size_t n) { return {FamilyKind::cycle, n, 0, {}}; }
  static FamilySpec star(std::size_t n) { return {FamilyKind::star, n, 0, {}}; }
  static FamilySpec broom(std::size_t n, std::size_t k) { return {FamilyKind::broom, n, k, {}}; }
  static FamilySpec star_like(std::vector<std::size_t> lengths);

  /// Accepts "path:N", "cycle:N", "star:N", "broom:N:K" and "star_like:A,B,C".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

/// Throws GraphError when the spec violates its family's constraints.
///
/// Labelling: paths run 0-1-...-(n-1); stars and brooms have their hub at 0;
/// a broom's handle is 0-1-...-(k-1) with pendants k..n-1 on vertex 0;
/// a star-like tree has its root at 0 and branches laid out consecutively.
Graph make_family(const FamilySpec &spec);

struct RootedTree {
  Graph tree;
  VertexId root = 0;
};

/// New root (vertex 0 of the result) adjacent to the root of every branch.
RootedTree attach_branches(std::span<const RootedTree> branches);

/// Path P_len rooted at one of its ends.
RootedTree rooted_path(std::size_t len);

struct PseudoLeaf {
  VertexId v = 0;          // the pseudo-leaf
  VertexId z = 0;          // leaf neighbour of v
  VertexId u = 0;          // neighbour of v of largest degree (u == z when deg v == 1)
  std::size_t degree = 0;  // deg(v)
};

/// First vertex (by id) that is not isolated, has at most one non-leaf
/// neighbour, and has a leaf neighbour z != u. Throws GraphError if g is not a
/// forest or has no edges.
PseudoLeaf find_pseudo_leaf(const Graph &g);

/// Branch lengths (non-increasing) around the branching vertex when g is a
/// tree with exactly one vertex of degree >= 3; nullopt otherwise (paths
/// included).
std::optional<std::vector<std::size_t>> star_like_branches(const Graph &g);

std::size_t leaf_count(const Graph &g);

/// Short human-readable name: "P_9", "K_{1,8}", "B^3_9", "[P_3,P_3,P_4]",
/// or "tree" for anything else.
std::string describe_tree(const Graph &g);

} // namespace nearlyz
