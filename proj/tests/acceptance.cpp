// One PASS/FAIL line per acceptance criterion. Optional argv[1]: path to the
// nearlyz CLI, used for the byte-level determinism check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "nearlyz/extremal.hpp"
#include "nearlyz/graph6.hpp"
#include "nearlyz/invariants.hpp"
#include "nearlyz/report.hpp"
#include "nearlyz/tree_gen.hpp"

using namespace nearlyz;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> details;

  void require(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      details.push_back(what);
    }
  }
  void absorb(const VerificationResult &r) {
    if (r.passed())
      return;
    ok = false;
    for (const Counterexample &c : r.counterexamples)
      details.push_back(r.claim + ": " + (c.graph6.empty() ? "" : c.graph6 + " ") + c.details);
  }
};

std::string run_command(const std::string &cmd) {
  std::string out;
  FILE *p = ::popen(cmd.c_str(), "r");
  if (!p)
    return out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0)
    out.append(buf, got);
  if (::pclose(p) != 0)
    out = "<command failed>";
  return out;
}

Graph path(std::size_t n) { return n == 0 ? Graph(0) : make_family(FamilySpec::path(n)); }

Outcome golden_tables() {
  Outcome o;
  const GoldenTable &t9 = golden_table(9);
  const GoldenTable &t10 = golden_table(10);
  auto minmax = [](const GoldenTable &t) {
    auto [lo, hi] = std::minmax_element(t.values.begin(), t.values.end());
    return std::pair(*lo, *hi);
  };
  o.require(t9.values.size() == 47 && minmax(t9) == std::pair<std::uint64_t, std::uint64_t>(28, 71),
            "n = 9 table is not 47 values from 28 to 71");
  o.require(t10.values.size() == 106 && minmax(t10) == std::pair<std::uint64_t, std::uint64_t>(36, 130),
            "n = 10 table is not 106 values from 36 to 130");
  VerificationResult r9 = verify_table(9);
  VerificationResult r10 = verify_table(10);
  o.absorb(r9);
  o.absorb(r10);
  o.require(r9.instances == 47 && r10.instances == 106, "tree counts differ from 47 / 106");
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (std::size_t n = 0; n <= 20; ++n) {
    const Graph p = path(n);
    o.require(z0_path_closed(n) == zk_oracle(p, 0), "Z_0(P_" + std::to_string(n) + ")");
    o.require(z1_path_closed(n) == zk_oracle(p, 1), "Z_1(P_" + std::to_string(n) + ")");
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    const Graph c = make_family(FamilySpec::cycle(n));
    o.require(z1_cycle_closed(n) == zk_oracle(c, 1), "Z_1(C_" + std::to_string(n) + ")");
    o.require(sigma1_cycle_closed(n) == sigma1_oracle(c), "sigma_1(C_" + std::to_string(n) + ")");
  }
  const BigCount p5 = zk_oracle(path(5), 0);
  o.require(p5 == 8 && z0_path_closed(5) == 8, "Z_0(P_5) is not 8");
  o.require(p5 != 7, "Z_0(P_5) equals the misprinted 7");
  return o;
}

Outcome identities() {
  Outcome o;
  for (const VerificationResult &r : verify_identities())
    o.absorb(r);
  return o;
}

Outcome extremal_theorems() {
  Outcome o;
  o.absorb(verify_min_theorems(9, 13));
  o.absorb(verify_max_theorem(9, 13));
  return o;
}

Outcome second_max() {
  Outcome o;
  o.absorb(check_second_max(9, 16));
  ExtremalReport r10 = scan_order(10);
  o.require(r10.second_max && r10.second_max->value == 126, "second maximum at n = 10 is not 126");
  return o;
}

Outcome lemmas() {
  Outcome o;
  for (const VerificationResult &r : verify_lemma_inequalities())
    o.absorb(r);
  return o;
}

Outcome monotonicity() {
  Outcome o;
  VerificationResult r = monotonicity_suite(42, 500);
  o.absorb(r);
  return o;
}

Outcome determinism(const std::string &cli) {
  Outcome o;
  std::vector<std::string> json;
  for (std::size_t jobs : {1u, 2u, 8u}) {
    if (cli.empty()) {
      ScanOptions opt;
      opt.jobs = jobs;
      json.push_back(report_json(scan_order(12, opt)));
    } else {
      json.push_back(run_command(cli + " scan --n 12 --json --jobs " + std::to_string(jobs)));
    }
  }
  o.require(json[0].find("\"schema\": 1") != std::string::npos, "scan JSON missing");
  o.require(json[0] == json[1] && json[0] == json[2], "scan JSON differs across --jobs 1/2/8");

  std::string full;
  for (const Graph &t : enumerate_free_trees(10))
    full += to_graph6(t) + "\n";
  std::string sliced;
  for (const Graph &t : enumerate_free_trees(10, 0, 10))
    sliced += to_graph6(t) + "\n";
  for (const Graph &t : enumerate_free_trees(10, 10, 106))
    sliced += to_graph6(t) + "\n";
  o.require(full == sliced, "enumeration slices do not concatenate");
  if (!cli.empty()) {
    const std::string a = run_command(cli + " enumerate --n 10 --range 0..10");
    const std::string b = run_command(cli + " enumerate --n 10 --range 10..106");
    o.require(run_command(cli + " enumerate --n 10") == a + b && a + b == full,
              "CLI enumeration slices do not concatenate");
  }
  return o;
}

} // namespace

int main(int argc, char **argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char *name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden tables n = 9, 10", 5, golden_tables},
      {2, "closed forms vs oracles", 10, closed_forms},
      {3, "identity suites", 60, identities},
      {4, "extremal theorems 9 <= n <= 13", 60, extremal_theorems},
      {5, "second maximum 9 <= n <= 16", 300, second_max},
      {6, "inequality lemma suite", 300, lemmas},
      {7, "monotonicity, 500 instances", 60, monotonicity},
      {8, "determinism", 60, [&] { return determinism(cli); }},
  };

  int failures = 0;
  for (const Criterion &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= c.limit_seconds, "time limit exceeded");
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << std::left << std::setw(34)
              << c.name << std::right << std::fixed << std::setprecision(2) << std::setw(8) << secs
              << " s  (limit " << std::setprecision(0) << c.limit_seconds << " s)\n";
    for (const std::string &d : o.details)
      std::cout << "        " << d << "\n";
  }
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : "all criteria pass")
            << "\n";
  return failures ? 1 : 0;
}
