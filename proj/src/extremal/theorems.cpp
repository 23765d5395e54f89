#include <stdexcept>
#include <string>

#include "nearlyz/extremal.hpp"
#include "nearlyz/graph6.hpp"
#include "nearlyz/invariants.hpp"
#include "nearlyz/sampling.hpp"
#include "nearlyz/tree_gen.hpp"

namespace nearlyz {

namespace {

std::string range_text(std::size_t lo, std::size_t hi) {
  return std::to_string(lo) + " <= n <= " + std::to_string(hi);
}

void require_range(std::size_t lo, std::size_t hi, std::size_t floor, std::size_t ceiling) {
  if (lo < floor || hi < lo || hi > ceiling)
    throw std::out_of_range("order range " + std::to_string(lo) + ".." + std::to_string(hi) +
                            " outside " + std::to_string(floor) + ".." + std::to_string(ceiling));
}

std::string witness_list(const ExtremeEntry &e) {
  std::string s;
  for (const Witness &w : e.witnesses)
    s += (s.empty() ? "" : ", ") + w.shape + " " + w.graph6;
  return s;
}

std::string best_branches_name(const std::vector<std::size_t> &b) {
  return describe_tree(make_family(FamilySpec::star_like(b)));
}

// Fails unless `entry` is attained by exactly the tree `expected` with value `value`.
void expect_unique(VerificationResult &r, std::size_t n, const char *rank,
                   const std::optional<ExtremeEntry> &entry, const Graph &expected,
                   const BigCount &value) {
  const std::string where = "n = " + std::to_string(n) + ": " + rank + " ";
  if (!entry) {
    r.counterexamples.push_back({to_graph6(expected), where + "missing"});
    return;
  }
  if (!entry->unique() || entry->witnesses[0].code != canonical_tree_code(expected))
    r.counterexamples.push_back(
        {entry->witnesses.front().graph6, where + "attained by " + witness_list(*entry) +
                                              ", expected only " + describe_tree(expected)});
  if (entry->value != value)
    r.counterexamples.push_back({to_graph6(expected), where + "value " + entry->value.str() +
                                                          ", closed form " + value.str()});
}

// Informational: where the expected tripod stands among tripods by Z_0.
std::string tripod_z0_note(std::size_t n, const std::vector<std::size_t> &expected) {
  BigCount best(0);
  std::vector<std::size_t> best_branches;
  for (std::size_t a = n - 3; a >= 1; --a)
    for (std::size_t b = std::min(a, n - 2 - a); b >= 1; --b) {
      const std::size_t c = n - 1 - a - b;
      if (c < 1 || c > b)
        continue;
      const BigCount v = forest_counts(make_family(FamilySpec::star_like({a, b, c}))).z0;
      if (v > best) {
        best = v;
        best_branches = {a, b, c};
      }
    }
  const BigCount mine = forest_counts(make_family(FamilySpec::star_like(expected))).z0;
  return "largest Z_0 among tripods " + best_branches_name(best_branches) + " = " + best.str() +
         ", expected tripod has Z_0 = " + mine.str();
}

ScanOptions scan_options(std::size_t jobs) {
  ScanOptions o;
  o.jobs = jobs;
  return o;
}

} // namespace

VerificationResult verify_min_theorems(std::size_t lo, std::size_t hi, std::size_t jobs) {
  require_range(lo, hi, 9, kMaxEnumerationOrder);
  VerificationResult r{"star-minimum-and-broom-second-minimum", range_text(lo, hi), 0, {}, {}};
  ScanOptions options = scan_options(jobs);
  options.max_order = kMaxEnumerationOrder;
  for (std::size_t n = lo; n <= hi; ++n) {
    ExtremalReport rep = scan_order(n, options);
    r.instances += rep.tree_count;
    expect_unique(r, n, "minimum", rep.min, make_family(FamilySpec::star(n)), z1_star_closed(n));
    expect_unique(r, n, "second minimum", rep.second_min, make_family(FamilySpec::broom(n, 3)),
                  z1_broom3_closed(n));
  }
  return r;
}

VerificationResult verify_max_theorem(std::size_t lo, std::size_t hi, std::uint64_t seed,
                                      std::size_t forests_per_order, std::size_t jobs) {
  require_range(lo, hi, 9, kMaxEnumerationOrder);
  VerificationResult r{"path-maximum", range_text(lo, hi), 0, {}, {}};
  ScanOptions options = scan_options(jobs);
  options.max_order = kMaxEnumerationOrder;
  Sampler sampler(seed);
  for (std::size_t n = lo; n <= hi; ++n) {
    const Graph path = make_family(FamilySpec::path(n));
    const BigCount bound = z1_path_closed(n);
    ExtremalReport rep = scan_order(n, options);
    r.instances += rep.tree_count;
    expect_unique(r, n, "maximum", rep.max, path, bound);

    for (std::size_t i = 0; i < forests_per_order; ++i) {
      Graph f = sampler.forest(n);
      ++r.instances;
      BigCount v = z1_tree_dp(f);
      const bool is_path = f.is_tree() && canonical_tree_code(f) == canonical_tree_code(path);
      if (v > bound || (v == bound && !is_path))
        r.counterexamples.push_back({to_graph6(f), "forest of order " + std::to_string(n) +
                                                       " has Z_1 = " + v.str() + " >= Z_1(P_n) = " +
                                                       bound.str()});
    }
  }
  r.notes.push_back(std::to_string(forests_per_order) + " random forests per order, seed " +
                    std::to_string(seed));
  return r;
}

VerificationResult check_second_max(std::size_t lo, std::size_t hi, std::size_t jobs) {
  require_range(lo, hi, 9, 20);
  VerificationResult r{"second-maximum-tripod", range_text(lo, hi), 0, {}, {}};
  ScanOptions options = scan_options(jobs);
  for (std::size_t n = lo; n <= hi; ++n) {
    ExtremalReport rep = scan_order(n, options);
    r.instances += rep.tree_count;
    const std::string where = "n = " + std::to_string(n) + ": ";
    if (!rep.second_max) {
      r.counterexamples.push_back({"", where + "no second maximum"});
      continue;
    }
    const ExtremeEntry &e = *rep.second_max;
    for (const Witness &w : e.witnesses)
      if (leaf_count(parse_graph6(w.graph6)) != 3)
        r.counterexamples.push_back({w.graph6, where + w.shape + " attains the second maximum " +
                                                   e.value.str() + " but is not a tripod"});
    const std::vector<std::size_t> branches =
        (n == 9 || n == 11) ? std::vector<std::size_t>{n - 3, 1, 1}
                            : std::vector<std::size_t>{n - 7, 3, 3};
    const Graph expected = make_family(FamilySpec::star_like(branches));
    const CanonicalTreeCode code = canonical_tree_code(expected);
    bool found = false;
    for (const Witness &w : e.witnesses)
      found = found || w.code == code;
    if (!found)
      r.counterexamples.push_back({to_graph6(expected), where + describe_tree(expected) +
                                                            " does not attain " + e.value.str() +
                                                            " (attained by " + witness_list(e) + ")"});
    r.notes.push_back(where + e.value.str() + " by " + witness_list(e));
    if (e.witnesses.size() > 1)
      r.notes.push_back(where + "tie between " + std::to_string(e.witnesses.size()) + " trees");
    r.notes.push_back(where + tripod_z0_note(n, branches));
  }
  return r;
}

} // namespace nearlyz
