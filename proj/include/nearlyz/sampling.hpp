#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "nearlyz/graph.hpp"

namespace nearlyz {

/// Seeded generator used by every randomized suite. std::mt19937_64 output is
/// fully specified, and bounded draws avoid the implementation-defined
/// standard distributions, so a seed reproduces the same instances everywhere.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  /// m distinct edges on n vertices, uniformly.
  Graph graph(std::size_t n, std::size_t m);
  /// Uniform labelled tree (Pruefer decoding).
  Graph tree(std::size_t n);
  /// Random tree with each edge kept with probability 2/3.
  Graph forest(std::size_t n);

private:
  std::mt19937_64 rng_;
};

/// Labelled tree of a Pruefer sequence over [0, n), n = seq.size() + 2.
Graph tree_from_pruefer(const std::vector<VertexId> &seq);

} // namespace nearlyz
