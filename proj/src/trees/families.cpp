#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <string>

#include "nearlyz/tree_gen.hpp"

namespace nearlyz {

namespace {

std::size_t parse_size(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw GraphError("bad family spec '" + std::string(whole) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos)
      return parts;
    start = pos + 1;
  }
}

} // namespace

FamilySpec FamilySpec::star_like(std::vector<std::size_t> lengths) {
  std::size_t n = std::accumulate(lengths.begin(), lengths.end(), std::size_t{1});
  return {FamilyKind::star_like, n, 0, std::move(lengths)};
}

FamilySpec FamilySpec::parse(std::string_view text) {
  auto parts = split(text, ':');
  const std::string_view kind = parts.front();
  if ((kind == "path" || kind == "cycle" || kind == "star") && parts.size() == 2) {
    std::size_t n = parse_size(parts[1], text);
    return kind == "path" ? path(n) : kind == "cycle" ? cycle(n) : star(n);
  }
  if (kind == "broom" && parts.size() == 3)
    return broom(parse_size(parts[1], text), parse_size(parts[2], text));
  if ((kind == "star_like" || kind == "star-like") && parts.size() == 2) {
    std::vector<std::size_t> lengths;
    for (auto piece : split(parts[1], ','))
      lengths.push_back(parse_size(piece, text));
    return star_like(std::move(lengths));
  }
  throw GraphError("bad family spec '" + std::string(text) +
                   "' (expected path:N, cycle:N, star:N, broom:N:K or star_like:A,B,...)");
}

std::string FamilySpec::to_string() const {
  switch (kind) {
  case FamilyKind::path:
    return "path:" + std::to_string(n);
  case FamilyKind::cycle:
    return "cycle:" + std::to_string(n);
  case FamilyKind::star:
    return "star:" + std::to_string(n);
  case FamilyKind::broom:
    return "broom:" + std::to_string(n) + ":" + std::to_string(handle);
  case FamilyKind::star_like: {
    std::string s = "star_like:";
    for (std::size_t i = 0; i < branches.size(); ++i)
      s += (i ? "," : "") + std::to_string(branches[i]);
    return s;
  }
  }
  return {};
}

Graph make_family(const FamilySpec &spec) {
  const std::size_t n = spec.n;
  std::vector<Edge> edges;
  auto fail = [&](const std::string &why) { throw GraphError(spec.to_string() + ": " + why); };
  switch (spec.kind) {
  case FamilyKind::path:
    if (n < 1)
      fail("path needs n >= 1");
    for (VertexId i = 0; i + 1 < n; ++i)
      edges.emplace_back(i, i + 1);
    break;
  case FamilyKind::cycle:
    if (n < 3)
      fail("cycle needs n >= 3");
    for (VertexId i = 0; i < n; ++i)
      edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    break;
  case FamilyKind::star:
    if (n < 1)
      fail("star needs n >= 1");
    for (VertexId i = 1; i < n; ++i)
      edges.emplace_back(0, i);
    break;
  case FamilyKind::broom:
    if (spec.handle < 3 || spec.handle > n)
      fail("broom needs 3 <= k <= n");
    for (VertexId i = 0; i + 1 < spec.handle; ++i)
      edges.emplace_back(i, i + 1);
    for (auto i = static_cast<VertexId>(spec.handle); i < n; ++i)
      edges.emplace_back(0, i);
    break;
  case FamilyKind::star_like: {
    if (spec.branches.empty())
      fail("star-like tree needs at least one branch");
    if (std::accumulate(spec.branches.begin(), spec.branches.end(), std::size_t{1}) != n)
      fail("branch lengths must sum to n - 1");
    VertexId next = 1;
    for (std::size_t len : spec.branches) {
      if (len < 1)
        fail("branch lengths must be >= 1");
      VertexId prev = 0;
      for (std::size_t i = 0; i < len; ++i, ++next) {
        edges.emplace_back(prev, next);
        prev = next;
      }
    }
    break;
  }
  }
  return Graph(n, edges);
}

RootedTree rooted_path(std::size_t len) { return {make_family(FamilySpec::path(len)), 0}; }

RootedTree attach_branches(std::span<const RootedTree> branches) {
  std::vector<Edge> edges;
  VertexId offset = 1;
  for (const RootedTree &b : branches) {
    if (!b.tree.is_tree())
      throw GraphError("branch is not a tree: " + to_string(b.tree));
    if (!b.tree.contains(b.root))
      throw GraphError("branch root out of range");
    edges.emplace_back(0, offset + b.root);
    for (const Edge &e : b.tree.edges())
      edges.emplace_back(offset + e.a, offset + e.b);
    offset += static_cast<VertexId>(b.tree.order());
  }
  return {Graph(offset, edges), 0};
}

PseudoLeaf find_pseudo_leaf(const Graph &g) {
  if (!g.is_forest())
    throw GraphError("pseudo-leaf search requires a forest");
  if (g.size() == 0)
    throw GraphError("pseudo-leaf search requires at least one edge");
  for (VertexId v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty())
      continue;
    std::size_t inner = 0;
    VertexId u = nb.front();
    for (VertexId w : nb) {
      if (g.degree(w) > 1)
        ++inner;
      if (g.degree(w) > g.degree(u))
        u = w;
    }
    if (inner > 1)
      continue;
    if (nb.size() == 1) {
      if (g.degree(u) == 1)
        return {v, u, u, 1};
      continue;
    }
    for (VertexId w : nb)
      if (w != u && g.degree(w) == 1)
        return {v, w, u, nb.size()};
  }
  throw GraphError("no pseudo-leaf found"); // unreachable for forests with an edge
}

std::optional<std::vector<std::size_t>> star_like_branches(const Graph &g) {
  if (!g.is_tree())
    return std::nullopt;
  std::optional<VertexId> hub;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) {
      if (hub)
        return std::nullopt;
      hub = v;
    }
  }
  if (!hub)
    return std::nullopt;
  std::vector<std::size_t> lengths;
  for (VertexId start : g.neighbors(*hub)) {
    std::size_t len = 1;
    VertexId prev = *hub;
    VertexId cur = start;
    while (g.degree(cur) == 2) {
      auto nb = g.neighbors(cur);
      VertexId next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t leaf_count(const Graph &g) {
  std::size_t leaves = 0;
  for (VertexId v = 0; v < g.order(); ++v)
    leaves += g.degree(v) == 1 ? 1 : 0;
  return leaves;
}

std::string describe_tree(const Graph &g) {
  const std::size_t n = g.order();
  if (!g.is_tree())
    return g.is_forest() ? "forest" : "graph";
  auto degrees = degree_sequence(g);
  if (degrees.front() <= 2)
    return "P_" + std::to_string(n);
  if (degrees.front() == n - 1)
    return "K_{1," + std::to_string(n - 1) + "}";
  if (degrees.front() == n - 2 && degrees[1] == 2)
    return "B^3_" + std::to_string(n);
  if (auto branches = star_like_branches(g)) {
    std::string s = "[";
    for (std::size_t i = 0; i < branches->size(); ++i)
      s += (i ? ",P_" : "P_") + std::to_string((*branches)[i]);
    return s + "]";
  }
  return "tree";
}

} // namespace nearlyz
