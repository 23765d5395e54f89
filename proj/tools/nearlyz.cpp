#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nearlyz/extremal.hpp"
#include "nearlyz/graph6.hpp"
#include "nearlyz/invariants.hpp"
#include "nearlyz/report.hpp"
#include "nearlyz/tree_gen.hpp"

namespace {

using namespace nearlyz;

enum Exit { kPass = 0, kFail = 1, kParse = 2, kUsage = 3, kCap = 4 };

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct IndexRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

// "A..B", half-open.
IndexRange parse_range(const std::string &text) {
  const auto dots = text.find("..");
  IndexRange r;
  auto number = [&](std::string_view s, std::uint64_t &out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
  };
  std::string_view view(text);
  if (dots == std::string::npos || !number(view.substr(0, dots), r.first) ||
      !number(view.substr(dots + 2), r.last) || r.first > r.last)
    throw UsageError("bad range '" + text + "', expected A..B with A <= B");
  return r;
}

std::string read_input(const std::string &path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Graph> read_graphs(const std::string &path, const std::string &format) {
  const std::string text = read_input(path);
  if (format == "edgelist")
    return parse_edge_list(text);
  std::istringstream in(text);
  return parse_graph6_stream(in);
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string invariant = "z1";
  std::size_t k = 1;
  std::string input = "-";
  std::string format = "graph6";
  std::string method = "auto";
  std::string family;
  bool json = false;
  std::optional<std::size_t> oracle_cap;
};

BigCount closed_value(const FamilySpec &f, const std::string &invariant, std::size_t k) {
  const bool z0 = invariant == "z0" || (invariant == "zk" && k == 0);
  const bool z1 = invariant == "z1" || (invariant == "zk" && k == 1);
  switch (f.kind) {
  case FamilyKind::path:
    if (z0)
      return z0_path_closed(f.n);
    if (z1)
      return z1_path_closed(f.n);
    if (invariant == "sigma1")
      return sigma1_path_closed(f.n);
    break;
  case FamilyKind::cycle:
    if (z1)
      return z1_cycle_closed(f.n);
    if (invariant == "sigma1")
      return sigma1_cycle_closed(f.n);
    break;
  case FamilyKind::star:
    if (z1)
      return z1_star_closed(f.n);
    break;
  case FamilyKind::broom:
    if (z1 && f.handle == 3)
      return z1_broom3_closed(f.n);
    break;
  case FamilyKind::star_like:
    break;
  }
  throw NotApplicable("no closed form for " + invariant + " of " + f.to_string());
}

BigCount compute_value(const Graph &g, const ComputeArgs &a, const OracleCaps &caps) {
  std::string inv = a.invariant;
  if (inv == "zk" && a.k <= 1 && a.method != "oracle")
    inv = a.k == 0 ? "z0" : "z1";
  std::string method = a.method;
  if (method == "auto") {
    if (inv == "z0")
      method = "recursive";
    else if (inv == "z1")
      method = g.is_forest() ? "dp" : "recursive";
    else
      method = "oracle";
  }
  if (method == "oracle") {
    if (inv == "sigma1")
      return sigma1_oracle(g, caps);
    return zk_oracle(g, inv == "z0" ? 0 : inv == "z1" ? 1 : a.k, caps);
  }
  if (method == "recursive" && (inv == "z0" || inv == "z1"))
    return inv == "z0" ? z0(g) : z1_recursive(g);
  if (method == "dp" && (inv == "z0" || inv == "z1")) {
    ForestCounts c = forest_counts(g);
    return inv == "z0" ? c.z0 : c.z1;
  }
  throw NotApplicable("method " + method + " does not compute " + a.invariant);
}

int run_compute(const ComputeArgs &a) {
  const OracleCaps caps = a.oracle_cap ? OracleCaps::uniform(*a.oracle_cap) : OracleCaps::from_env();
  if (a.invariant == "zk" && a.k > 1 && a.method != "auto" && a.method != "oracle")
    throw NotApplicable("Z_k for k >= 2 is only available from the oracle");

  std::vector<Graph> graphs;
  std::optional<FamilySpec> family;
  if (!a.family.empty()) {
    family = FamilySpec::parse(a.family);
    graphs.push_back(make_family(*family));
  } else {
    if (a.method == "closed")
      throw NotApplicable("method closed needs --family");
    graphs = read_graphs(a.input, a.format);
  }

  std::vector<BigCount> values;
  for (const Graph &g : graphs)
    values.push_back(a.method == "closed" ? closed_value(*family, a.invariant, a.k)
                                          : compute_value(g, a, caps));

  if (a.json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["invariant"] = a.invariant;
    if (a.invariant == "zk")
      j["k"] = a.k;
    j["method"] = a.method;
    auto results = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      nlohmann::ordered_json item;
      item["graph6"] = graphs[i].order() <= kGraph6MaxOrder ? to_graph6(graphs[i]) : "";
      item["value"] = values[i].str();
      results.push_back(item);
    }
    j["results"] = results;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const BigCount &v : values)
      std::cout << v << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::size_t n = 0;
  std::string range;
  std::string out;
};

int run_enumerate(const EnumerateArgs &a) {
  if (a.n < 1 || a.n > kMaxEnumerationOrder)
    throw std::out_of_range("--n must be in 1.." + std::to_string(kMaxEnumerationOrder));
  std::optional<IndexRange> range;
  if (!a.range.empty())
    range = parse_range(a.range);

  std::string text;
  FreeTreeEnumerator it(a.n);
  const std::uint64_t first = range ? range->first : 0;
  if (first > 0 && it.skip(first) < first)
    throw std::out_of_range("range starts past the last tree");
  while (it.next()) {
    if (range && it.index() >= range->last)
      break;
    text += to_graph6(it.graph());
    text += '\n';
  }
  const std::uint64_t produced = text.empty() ? 0 : static_cast<std::uint64_t>(
                                                        std::count(text.begin(), text.end(), '\n'));
  if (range && produced != range->last - range->first)
    throw std::out_of_range("range ends past the last tree (" +
                            std::to_string(range->first + produced) + " trees)");

  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.out, std::ios::binary);
    if (!out || !(out << text))
      throw UsageError("cannot write '" + a.out + "'");
  }
  return kPass;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
  std::size_t n = 0;
  std::size_t jobs = 1;
  std::size_t max_order = 20;
  bool json = false;
  bool elapsed = false;
};

int run_scan(const ScanArgs &a) {
  ScanOptions options;
  options.jobs = a.jobs;
  options.max_order = a.max_order;
  ExtremalReport report = scan_order(a.n, options);
  std::cout << (a.json ? report_json(report, a.elapsed) : report_text(report));
  return kPass;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::string n_range;
  std::uint64_t seed = 42;
  std::size_t jobs = 1;
  std::size_t trials = 500;
  bool json = false;
};

int run_verify(const VerifyArgs &a) {
  static const std::vector<std::string> suites = {
      "tables", "min", "max", "second-max", "lemmas", "monotonicity", "identities"};
  if (a.suite != "all" && std::find(suites.begin(), suites.end(), a.suite) == suites.end())
    throw UsageError("unknown suite '" + a.suite + "'");
  std::optional<IndexRange> range;
  if (!a.n_range.empty())
    range = parse_range(a.n_range);
  // Inclusive order range with a per-suite default.
  auto orders = [&](std::uint64_t lo, std::uint64_t hi) {
    return range ? std::pair<std::size_t, std::size_t>(range->first, range->last)
                 : std::pair<std::size_t, std::size_t>(lo, hi);
  };

  std::vector<VerificationResult> results;
  auto wants = [&](const char *name) { return a.suite == "all" || a.suite == name; };
  if (wants("tables")) {
    for (std::size_t n : {9, 10}) {
      auto [lo, hi] = orders(9, 10);
      if (n >= lo && n <= hi)
        results.push_back(verify_table(n));
    }
  }
  if (wants("min")) {
    auto [lo, hi] = orders(9, 13);
    results.push_back(verify_min_theorems(lo, hi, a.jobs));
  }
  if (wants("max")) {
    auto [lo, hi] = orders(9, 13);
    results.push_back(verify_max_theorem(lo, hi, a.seed, 50, a.jobs));
  }
  if (wants("second-max")) {
    auto [lo, hi] = orders(9, 16);
    results.push_back(check_second_max(lo, hi, a.jobs));
  }
  if (wants("lemmas")) {
    LemmaConfig config;
    if (range) {
      config.ironing_max_n = range->last;
      config.merge_max_n = range->last;
    }
    for (auto &r : verify_lemma_inequalities(config))
      results.push_back(std::move(r));
  }
  if (wants("monotonicity"))
    results.push_back(monotonicity_suite(a.seed, a.trials));
  if (wants("identities")) {
    IdentityConfig config;
    config.seed = a.seed;
    for (auto &r : verify_identities(config))
      results.push_back(std::move(r));
  }

  bool all = true;
  for (const auto &r : results)
    all = all && r.passed();
  if (a.json) {
    std::cout << result_json(results);
  } else {
    for (const auto &r : results)
      std::cout << result_text(r);
    std::cout << (all ? "all claims pass" : "verification FAILED") << "\n";
  }
  return all ? kPass : kFail;
}

// ---------------------------------------------------------------------------

int run_tables(std::size_t n, bool json) {
  std::vector<std::size_t> orders = n ? std::vector<std::size_t>{n} : std::vector<std::size_t>{9, 10};
  nlohmann::ordered_json j;
  j["schema"] = 1;
  auto tables = nlohmann::ordered_json::array();
  for (std::size_t order : orders) {
    const GoldenTable &t = golden_table(order);
    if (json) {
      auto rows = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < t.values.size(); ++i)
        rows.push_back({{"index", i + 1},
                        {"value", std::to_string(t.values[i])},
                        {"graph6", i < t.drawings.size() ? t.drawings[i] : ""}});
      tables.push_back({{"n", order}, {"entries", rows}});
      continue;
    }
    std::cout << "n = " << order << "\n";
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      std::cout << std::setw(5) << i + 1 << std::setw(6) << t.values[i];
      if (i < t.drawings.size()) {
        Graph g = parse_graph6(t.drawings[i]);
        std::cout << "  " << std::left << std::setw(16) << describe_tree(g) << std::right
                  << t.drawings[i];
      }
      std::cout << "\n";
    }
  }
  if (json) {
    j["tables"] = tables;
    std::cout << j.dump(2) << "\n";
  }
  return kPass;
}

int run_line_graph(const std::string &input, const std::string &format) {
  for (const Graph &g : read_graphs(input, format))
    std::cout << to_graph6(line_graph(g)) << "\n";
  return kPass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact counts of nearly independent edge subsets, tree enumeration and extremal "
               "verification."};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto *c = app.add_subcommand("compute", "Evaluate an invariant on input graphs");
  c->add_option("--invariant", compute.invariant)
      ->check(CLI::IsMember({"z0", "z1", "zk", "sigma1"}));
  c->add_option("--k", compute.k, "k for --invariant zk");
  c->add_option("--input", compute.input, "Input file, - for stdin");
  c->add_option("--format", compute.format)->check(CLI::IsMember({"graph6", "edgelist"}));
  c->add_option("--method", compute.method)
      ->check(CLI::IsMember({"auto", "oracle", "recursive", "dp", "closed"}));
  c->add_option("--family", compute.family, "path:N | cycle:N | star:N | broom:N:K | star_like:A,B,..");
  c->add_flag("--json", compute.json);
  c->add_option("--oracle-cap", compute.oracle_cap, "Edge/vertex cap for brute-force oracles");

  EnumerateArgs enumerate;
  auto *e = app.add_subcommand("enumerate", "List all free trees of order n as graph6");
  e->add_option("--n", enumerate.n)->required();
  e->add_option("--range", enumerate.range, "Half-open index slice A..B");
  e->add_option("--out", enumerate.out);

  ScanArgs scan;
  auto *s = app.add_subcommand("scan", "Z_1 extremes over all trees of order n");
  s->add_option("--n", scan.n)->required();
  s->add_option("--jobs", scan.jobs)->check(CLI::Range(1, 256));
  s->add_option("--max-order", scan.max_order, "Raise the order ceiling (at most 24)");
  s->add_flag("--json", scan.json);
  s->add_flag("--elapsed", scan.elapsed, "Include timing in JSON output");

  VerifyArgs verify;
  auto *v = app.add_subcommand("verify", "Run verification suites");
  v->add_option("--suite", verify.suite);
  v->add_option("--n-range", verify.n_range, "Inclusive order range A..B");
  v->add_option("--seed", verify.seed);
  v->add_option("--jobs", verify.jobs)->check(CLI::Range(1, 256));
  v->add_option("--trials", verify.trials, "Monotonicity trials");
  v->add_flag("--json", verify.json);

  std::size_t table_n = 0;
  bool table_json = false;
  auto *t = app.add_subcommand("tables", "Print the embedded reference tables");
  t->add_option("--n", table_n)->check(CLI::IsMember({9, 10}));
  t->add_flag("--json", table_json);

  std::string lg_input = "-";
  std::string lg_format = "graph6";
  auto *l = app.add_subcommand("line-graph", "Print the line graph of each input graph");
  l->add_option("--input", lg_input);
  l->add_option("--format", lg_format)->check(CLI::IsMember({"graph6", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &err) {
    const int code = app.exit(err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (c->parsed())
      return run_compute(compute);
    if (e->parsed())
      return run_enumerate(enumerate);
    if (s->parsed())
      return run_scan(scan);
    if (v->parsed())
      return run_verify(verify);
    if (t->parsed())
      return run_tables(table_n, table_json);
    if (l->parsed())
      return run_line_graph(lg_input, lg_format);
  } catch (const ParseError &err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kParse;
  } catch (const CapExceeded &err) {
    std::cerr << "cap exceeded: " << err.what() << "\n";
    return kCap;
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
