#include <algorithm>
#include <string>

#include "nearlyz/extremal.hpp"
#include "nearlyz/graph6.hpp"
#include "nearlyz/invariants.hpp"
#include "nearlyz/sampling.hpp"
#include "nearlyz/tree_gen.hpp"

namespace nearlyz {

namespace {

bool has_p3(const Graph &g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 2)
      return true;
  return false;
}

BigCount z1_of(const Graph &g) { return zk_oracle(g, 1); }

std::string g6(const Graph &g) { return to_graph6(g); }

// Number of edges to draw for a random graph of order n.
std::size_t edge_budget(Sampler &s, std::size_t n, std::size_t max_edges) {
  return static_cast<std::size_t>(s.uniform(0, std::min(n * (n - 1) / 2, max_edges)));
}

} // namespace

VerificationResult monotonicity_suite(std::uint64_t seed, std::size_t trials) {
  VerificationResult r{"z1-monotonicity", std::to_string(trials) + " random graphs, seed " +
                                              std::to_string(seed),
                       0, {}, {}};
  Sampler s(seed);
  std::size_t cases[6] = {0, 0, 0, 0, 0, 0};
  auto fail = [&](const Graph &g, const std::string &what) { r.counterexamples.push_back({g6(g), what}); };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto n = static_cast<std::size_t>(s.uniform(2, 9));
    const Graph g = s.graph(n, edge_budget(s, n, 12));
    const BigCount base = z1_of(g);

    std::vector<Edge> missing;
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if (!g.has_edge(a, b))
          missing.emplace_back(a, b);
    if (!missing.empty()) {
      const Edge e = missing[s.uniform(0, missing.size() - 1)];
      const BigCount added = z1_of(add_edge(g, e));
      const bool expect_strict =
          g.degree(e.a) > 0 || g.degree(e.b) > 0 || has_p3(delete_vertices(g, {e.a, e.b}));
      ++r.instances;
      ++cases[expect_strict ? 0 : 1];
      const std::string what = "add " + std::to_string(e.a) + "-" + std::to_string(e.b) + ": " +
                               base.str() + " -> " + added.str();
      if (added < base)
        fail(g, what + " decreased");
      else if (expect_strict != (added > base))
        fail(g, what + (expect_strict ? " should increase" : " should stay equal"));
    }

    for (VertexId v = 0; v < n; ++v) {
      const BigCount reduced = z1_of(delete_vertices(g, {v}));
      const std::string what = "delete " + std::to_string(v) + " (degree " +
                               std::to_string(g.degree(v)) + "): " + base.str() + " -> " +
                               reduced.str();
      ++r.instances;
      if (g.degree(v) == 0) {
        ++cases[2];
        if (reduced != base)
          fail(g, what + " should stay equal");
      } else if (g.degree(v) >= 2) {
        ++cases[3];
        if (!(base > reduced))
          fail(g, what + " should decrease");
      } else if (const VertexId w = g.neighbors(v)[0]; g.degree(w) >= 2) {
        ++cases[4];
        if (!(base > reduced))
          fail(g, what + " should decrease");
      } else {
        // v lies in a P_2 component {v, w}.
        ++cases[5];
        const bool expect_strict = has_p3(delete_vertices(g, {v, w}));
        if (base < reduced)
          fail(g, what + " increased");
        else if (expect_strict != (base > reduced))
          fail(g, what + (expect_strict ? " should decrease" : " should stay equal"));
      }
    }
  }
  r.notes.push_back("edge additions: " + std::to_string(cases[0]) + " strict, " +
                    std::to_string(cases[1]) + " neutral");
  r.notes.push_back("vertex deletions: " + std::to_string(cases[2]) + " isolated, " +
                    std::to_string(cases[3]) + " degree >= 2, " + std::to_string(cases[4]) +
                    " pendant on a non-leaf, " + std::to_string(cases[5]) + " in a P_2 component");
  return r;
}

std::vector<VerificationResult> verify_identities(const IdentityConfig &config) {
  Sampler s(config.seed);
  std::vector<Graph> corpus;
  for (std::size_t n = 1; n <= config.tree_max_n; ++n)
    for (Graph &t : enumerate_free_trees(n))
      corpus.push_back(std::move(t));
  const std::size_t tree_count = corpus.size();
  for (std::size_t i = 0; i < config.random_graphs; ++i) {
    const auto n = static_cast<std::size_t>(s.uniform(1, 10));
    corpus.push_back(s.graph(n, edge_budget(s, n, config.random_max_edges)));
  }
  const std::string corpus_text = "trees n <= " + std::to_string(config.tree_max_n) + " (" +
                                  std::to_string(tree_count) + ") + " +
                                  std::to_string(config.random_graphs) +
                                  " random graphs m <= " + std::to_string(config.random_max_edges) +
                                  ", seed " + std::to_string(config.seed);

  VerificationResult rec{"vertex-recursion", corpus_text + ", every vertex", 0, {}, {}};
  VerificationResult line{"line-graph-identity", corpus_text, 0, {}, {}};
  VerificationResult partition{"partition-identity", corpus_text + " + random forests", 0, {}, {}};
  VerificationResult agree{"method-agreement", corpus_text, 0, {}, {}};

  auto check_partition = [&](const Graph &g, const std::vector<std::uint64_t> &hist) {
    std::uint64_t total = 0;
    for (std::uint64_t c : hist)
      total += c;
    ++partition.instances;
    if (total != (std::uint64_t{1} << g.size()))
      partition.counterexamples.push_back(
          {g6(g), "sum of Z_k = " + std::to_string(total) + ", 2^m = " +
                      std::to_string(std::uint64_t{1} << g.size())});
  };

  for (const Graph &g : corpus) {
    for (VertexId z = 0; z < g.order(); ++z) {
      auto sides = lemma_rec_sides(g, z);
      ++rec.instances;
      if (sides.lhs != sides.rhs)
        rec.counterexamples.push_back(
            {g6(g), "z = " + std::to_string(z) + ": " + sides.lhs.str() + " vs " + sides.rhs.str()});
    }

    const auto hist = zk_histogram(g);
    const BigCount z1 = hist.size() > 1 ? BigCount(hist[1]) : BigCount(0);
    const BigCount via_line = sigma1_oracle(line_graph(g));
    ++line.instances;
    if (z1 != via_line)
      line.counterexamples.push_back(
          {g6(g), "Z_1 = " + z1.str() + ", sigma_1 of line graph = " + via_line.str()});

    check_partition(g, hist);

    ++agree.instances;
    const BigCount z0_rec = z0(g);
    const BigCount z1_rec = z1_recursive(g);
    if (z0_rec != BigCount(hist.at(0)))
      agree.counterexamples.push_back({g6(g), "z0 " + z0_rec.str() + " vs oracle " +
                                                  std::to_string(hist[0])});
    if (z1_rec != z1)
      agree.counterexamples.push_back({g6(g), "z1_recursive " + z1_rec.str() + " vs oracle " +
                                                  z1.str()});
    if (g.is_forest() && z1_tree_dp(g) != z1)
      agree.counterexamples.push_back({g6(g), "z1_tree_dp " + z1_tree_dp(g).str() +
                                                  " vs oracle " + z1.str()});
  }

  VerificationResult mult{"z0-multiplicativity",
                          std::to_string(config.forests) + " random forests n <= 16, seed " +
                              std::to_string(config.seed),
                          0, {}, {}};
  for (std::size_t i = 0; i < config.forests; ++i) {
    const Graph f = s.forest(static_cast<std::size_t>(s.uniform(1, 16)));
    const auto hist = zk_histogram(f);
    check_partition(f, hist);
    BigCount by_oracle(1);
    BigCount by_dp(1);
    for (const Graph &c : connected_components(f)) {
      by_oracle *= zk_oracle(c, 0);
      by_dp *= forest_counts(c).z0;
    }
    ++mult.instances;
    if (by_oracle != BigCount(hist[0]) || by_dp != BigCount(hist[0]))
      mult.counterexamples.push_back({g6(f), "Z_0 = " + std::to_string(hist[0]) +
                                                 ", product over components " + by_oracle.str() +
                                                 " (oracle), " + by_dp.str() + " (dp)"});
  }

  VerificationResult closed{"closed-form-agreement",
                            "paths n <= " + std::to_string(config.path_max_n) + ", cycles 3 <= n <= " +
                                std::to_string(config.cycle_max_n),
                            0, {}, {}};
  auto compare = [&](const Graph &g, const char *what, const BigCount &formula,
                     const BigCount &oracle) {
    ++closed.instances;
    if (formula != oracle)
      closed.counterexamples.push_back(
          {g6(g), std::string(what) + ": formula " + formula.str() + ", oracle " + oracle.str()});
  };
  for (std::size_t n = 0; n <= config.path_max_n; ++n) {
    const Graph p = n == 0 ? Graph(0) : make_family(FamilySpec::path(n));
    compare(p, "Z_0(P_n)", z0_path_closed(n), zk_oracle(p, 0));
    compare(p, "Z_1(P_n)", z1_path_closed(n), zk_oracle(p, 1));
    compare(p, "sigma_1(P_n)", sigma1_path_closed(n), sigma1_oracle(p));
  }
  for (std::size_t n = 3; n <= config.cycle_max_n; ++n) {
    const Graph c = make_family(FamilySpec::cycle(n));
    compare(c, "Z_1(C_n)", z1_cycle_closed(n), zk_oracle(c, 1));
    compare(c, "sigma_1(C_n)", sigma1_cycle_closed(n), sigma1_oracle(c));
  }
  for (std::size_t n = 0; n <= config.exact_division_max_n; ++n) {
    ++closed.instances;
    try {
      (void)sigma1_path_closed(n);
    } catch (const std::logic_error &e) {
      closed.counterexamples.push_back({"", e.what()});
    }
  }
  closed.notes.push_back("Z_0(P_5) = " + z0_path_closed(5).str() + " (formula) = " +
                         zk_oracle(make_family(FamilySpec::path(5)), 0).str() + " (oracle)");
  closed.notes.push_back("sigma_1(P_n) division by 5 exact for n <= " +
                         std::to_string(config.exact_division_max_n));

  return {rec, line, partition, agree, mult, closed};
}

} // namespace nearlyz
