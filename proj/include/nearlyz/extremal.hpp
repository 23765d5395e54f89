#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nearlyz/bigcount.hpp"
#include "nearlyz/canonical.hpp"
#include "nearlyz/graph.hpp"

namespace nearlyz {

// ---------------------------------------------------------------------------
// Exhaustive scans

struct Witness {
  CanonicalTreeCode code;
  std::string graph6;
  std::string shape; // describe_tree()
};

/// One value level of the scan together with every tree attaining it,
/// sorted by canonical code.
struct ExtremeEntry {
  BigCount value;
  std::vector<Witness> witnesses;

  bool unique() const { return witnesses.size() == 1; }
};

struct ExtremalReport {
  std::size_t n = 0;
  std::uint64_t tree_count = 0;
  ExtremeEntry min;
  std::optional<ExtremeEntry> second_min;
  ExtremeEntry max;
  std::optional<ExtremeEntry> second_max;
  double elapsed_seconds = 0.0;
};

struct ScanOptions {
  std::size_t jobs = 1;
  std::size_t min_order = 4;
  std::size_t max_order = 20;
  /// Trees per work unit; workers take units round-robin.
  std::size_t chunk = 1024;
};

/// Z_1 extremes over all free trees of order n. The result does not depend on
/// options.jobs. Throws std::out_of_range outside [min_order, max_order].
ExtremalReport scan_order(std::size_t n, const ScanOptions &options = {});

// ---------------------------------------------------------------------------
// Verification

struct Counterexample {
  std::string graph6;
  std::string details;
};

struct VerificationResult {
  std::string claim;
  std::string range;
  std::uint64_t instances = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  bool passed() const { return counterexamples.empty(); }
};

/// Reference Z_1 values of all trees of one order, in table reading order, with the drawn
/// tree of each entry when available.
struct GoldenTable {
  std::size_t n = 0;
  std::vector<std::uint64_t> values;
  std::vector<std::string> drawings; // graph6, parallel to values (may be empty)
};

/// Embedded copy of tables/z1_n{9,10}.csv and tables/z1_n{9,10}_trees.csv.
const GoldenTable &golden_table(std::size_t n);

/// Parses the "index,value" CSV format. Throws ParseError.
GoldenTable parse_golden_csv(std::size_t n, std::string_view text);

/// Compares the sorted multiset of Z_1 over all trees of order table.n with
/// table.values. Drawings, when present, are cross-checked and reported as
/// notes.
VerificationResult verify_table(const GoldenTable &table);
VerificationResult verify_table(std::size_t n);

/// Star is the unique minimum and the broom B^3_n the unique second minimum,
/// for each n in [lo, hi] (lo >= 9).
VerificationResult verify_min_theorems(std::size_t lo, std::size_t hi, std::size_t jobs = 1);

/// P_n is the unique maximum over trees for each n in [lo, hi] (lo >= 9), and
/// bounds Z_1 of `forests_per_order` seeded random forests of the same order.
VerificationResult verify_max_theorem(std::size_t lo, std::size_t hi, std::uint64_t seed = 1,
                                      std::size_t forests_per_order = 50, std::size_t jobs = 1);

/// Second-largest Z_1 is attained by a tripod, namely [P_1,P_1,P_{n-3}] for
/// n in {9, 11} and [P_3,P_3,P_{n-7}] otherwise (9 <= lo <= hi <= 20).
VerificationResult check_second_max(std::size_t lo, std::size_t hi, std::size_t jobs = 1);

struct LemmaConfig {
  std::size_t path_max_n = 200;       // inequalities between path values
  std::size_t hosoya_tree_max_n = 10; // Z_0(T) <= Z_0(P_n)
  std::size_t ironing_max_n = 12;     // branch replacement by a path
  std::size_t merge_max_n = 12;       // merging two path branches
  /// Order from which the Z_1 branch lemmas are asserted; smaller instances
  /// are tallied in the notes only.
  std::size_t assert_from_n = 9;
};

/// One result per inequality family.
std::vector<VerificationResult> verify_lemma_inequalities(const LemmaConfig &config = {});

/// Edge-addition and vertex-deletion effects on Z_1 over `trials` seeded
/// random graphs, including the exact strictness conditions.
VerificationResult monotonicity_suite(std::uint64_t seed, std::size_t trials);

struct IdentityConfig {
  std::uint64_t seed = 42;
  std::size_t tree_max_n = 8;
  std::size_t random_graphs = 200;
  std::size_t random_max_edges = 12;
  std::size_t forests = 100;
  std::size_t path_max_n = 20;
  std::size_t cycle_max_n = 12;
  std::size_t exact_division_max_n = 500;
};

/// Vertex-deletion recursion, line-graph identity, partition identity, oracle
/// agreement, Z_0 multiplicativity and closed-form agreement.
std::vector<VerificationResult> verify_identities(const IdentityConfig &config = {});

} // namespace nearlyz
