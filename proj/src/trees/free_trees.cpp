#include <algorithm>
#include <stdexcept>
#include <string>

#include "nearlyz/tree_gen.hpp"

namespace nearlyz {

namespace {

using Layout = std::vector<int>;

// Successor of a rooted level sequence, changing positions >= p. p defaults to
// the last position whose level is not 1. Returns false past the last tree.
bool next_rooted(Layout &layout, std::size_t p = 0) {
  if (p == 0) {
    p = layout.size() - 1;
    while (p > 0 && layout[p] == 1)
      --p;
  }
  if (p == 0)
    return false;
  std::size_t q = p - 1;
  while (layout[q] != layout[p] - 1)
    --q;
  for (std::size_t i = p; i < layout.size(); ++i)
    layout[i] = layout[i - p + q];
  return true;
}

struct Split {
  Layout left; // first subtree of the root, re-levelled to start at 0
  Layout rest; // the root with its remaining subtrees
};

Split split_first_subtree(const Layout &layout) {
  std::size_t m = layout.size();
  for (std::size_t i = 2; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      m = i;
      break;
    }
  }
  Split s;
  for (std::size_t i = 1; i < m; ++i)
    s.left.push_back(layout[i] - 1);
  s.rest.push_back(0);
  for (std::size_t i = m; i < layout.size(); ++i)
    s.rest.push_back(layout[i]);
  return s;
}

int height(const Layout &l) { return l.empty() ? 0 : *std::max_element(l.begin(), l.end()); }

// A rooted sequence is the canonical center rooting of a free tree when the
// first subtree is no taller (and, at equal height, no larger or
// lexicographically greater) than the rest. Otherwise jump to the next
// candidate that can be.
void make_free(Layout &layout) {
  Split s = split_first_subtree(layout);
  const int lh = height(s.left);
  const int rh = height(s.rest);
  bool valid = rh >= lh;
  if (valid && rh == lh) {
    if (s.left.size() > s.rest.size())
      valid = false;
    else if (s.left.size() == s.rest.size() && s.left > s.rest)
      valid = false;
  }
  if (valid)
    return;
  const std::size_t p = s.left.size();
  const int old = layout[p];
  next_rooted(layout, p);
  if (old > 2) {
    Split ns = split_first_subtree(layout);
    const int h = height(ns.left);
    // suffix 1, 2, ..., h + 1
    for (int i = 0; i <= h; ++i)
      layout[layout.size() - static_cast<std::size_t>(h + 1) + static_cast<std::size_t>(i)] = i + 1;
  }
}

} // namespace

FreeTreeEnumerator::FreeTreeEnumerator(std::size_t n) : n_(n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::out_of_range("free tree order must be in [1, " + std::to_string(kMaxEnumerationOrder) +
                            "], got " + std::to_string(n));
}

bool FreeTreeEnumerator::advance() {
  if (done_)
    return false;
  if (!started_) {
    started_ = true;
    if (n_ <= 2) {
      layout_ = n_ == 1 ? Layout{0} : Layout{0, 1};
      return true;
    }
    // the path, rooted at its center
    for (std::size_t i = 0; i <= n_ / 2; ++i)
      layout_.push_back(static_cast<int>(i));
    for (std::size_t i = 1; i < (n_ + 1) / 2; ++i)
      layout_.push_back(static_cast<int>(i));
    make_free(layout_);
    return true;
  }
  if (n_ <= 2 || !next_rooted(layout_)) {
    done_ = true;
    return false;
  }
  make_free(layout_);
  return true;
}

bool FreeTreeEnumerator::next() {
  const bool was_started = started_;
  if (!advance())
    return false;
  if (was_started)
    ++index_;
  return true;
}

std::uint64_t FreeTreeEnumerator::skip(std::uint64_t k) {
  std::uint64_t moved = 0;
  while (moved < k && next())
    ++moved;
  return moved;
}

Graph FreeTreeEnumerator::graph() const {
  if (!started_ || done_)
    throw std::logic_error("FreeTreeEnumerator::graph called without a current tree");
  return graph_from_level_sequence(layout_);
}

Graph graph_from_level_sequence(std::span<const int> levels) {
  std::vector<Edge> edges;
  edges.reserve(levels.empty() ? 0 : levels.size() - 1);
  // last_at[d] is the most recent vertex seen at depth d
  std::vector<VertexId> last_at(levels.size() + 1, 0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto d = static_cast<std::size_t>(levels[i]);
    if (i > 0) {
      if (d == 0 || d > levels.size())
        throw GraphError("invalid level sequence");
      edges.emplace_back(last_at[d - 1], static_cast<VertexId>(i));
    }
    last_at[d] = static_cast<VertexId>(i);
  }
  return Graph(levels.size(), edges);
}

std::vector<Graph> enumerate_free_trees(std::size_t n) {
  std::vector<Graph> out;
  FreeTreeEnumerator it(n);
  while (it.next())
    out.push_back(it.graph());
  return out;
}

std::vector<Graph> enumerate_free_trees(std::size_t n, std::uint64_t first, std::uint64_t last) {
  std::vector<Graph> out;
  FreeTreeEnumerator it(n);
  // after skip(first) the current tree is first - 1
  if (first > 0 && it.skip(first) < first)
    return out;
  while (it.next() && it.index() < last)
    out.push_back(it.graph());
  return out;
}

std::uint64_t count_free_trees(std::size_t n) {
  FreeTreeEnumerator it(n);
  std::uint64_t count = 0;
  while (it.next())
    ++count;
  return count;
}

} // namespace nearlyz
