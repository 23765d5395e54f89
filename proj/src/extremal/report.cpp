#include "nearlyz/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace nearlyz {

namespace {

using Json = nlohmann::ordered_json;

Json entry_json(const ExtremeEntry &e) {
  Json witnesses = Json::array();
  for (const Witness &w : e.witnesses)
    witnesses.push_back({{"shape", w.shape}, {"graph6", w.graph6}, {"code", w.code.to_string()}});
  return {{"value", e.value.str()}, {"witnesses", witnesses}};
}

Json optional_entry(const std::optional<ExtremeEntry> &e) { return e ? entry_json(*e) : Json(); }

} // namespace

std::string report_json(const ExtremalReport &report, bool with_elapsed) {
  Json j;
  j["schema"] = 1;
  j["n"] = report.n;
  j["tree_count"] = std::to_string(report.tree_count);
  j["min"] = entry_json(report.min);
  j["second_min"] = optional_entry(report.second_min);
  j["max"] = entry_json(report.max);
  j["second_max"] = optional_entry(report.second_max);
  if (with_elapsed)
    j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump(2) + "\n";
}

std::string result_json(const std::vector<VerificationResult> &results) {
  Json list = Json::array();
  bool all = true;
  for (const VerificationResult &r : results) {
    Json cex = Json::array();
    for (const Counterexample &c : r.counterexamples)
      cex.push_back({{"graph6", c.graph6}, {"details", c.details}});
    list.push_back({{"claim", r.claim},
                    {"range", r.range},
                    {"status", r.passed() ? "pass" : "fail"},
                    {"instances", std::to_string(r.instances)},
                    {"counterexamples", cex},
                    {"notes", r.notes}});
    all = all && r.passed();
  }
  Json j;
  j["schema"] = 1;
  j["status"] = all ? "pass" : "fail";
  j["results"] = list;
  return j.dump(2) + "\n";
}

std::string report_text(const ExtremalReport &report) {
  std::ostringstream out;
  out << "n = " << report.n << ", " << report.tree_count << " trees\n";
  out << std::left << std::setw(12) << "rank" << std::right << std::setw(10) << "Z_1" << "  "
      << std::left << std::setw(22) << "shape" << "graph6\n";
  auto row = [&](const char *rank, const std::optional<ExtremeEntry> &e) {
    if (!e)
      return;
    for (std::size_t i = 0; i < e->witnesses.size(); ++i) {
      const Witness &w = e->witnesses[i];
      out << std::left << std::setw(12) << (i ? "" : rank) << std::right << std::setw(10)
          << (i ? "" : e->value.str()) << "  " << std::left << std::setw(22) << w.shape << w.graph6
          << "\n";
    }
  };
  row("min", report.min);
  row("second_min", report.second_min);
  row("second_max", report.second_max);
  row("max", report.max);
  out << "elapsed " << std::fixed << std::setprecision(3) << report.elapsed_seconds << " s\n";
  return out.str();
}

std::string result_text(const VerificationResult &r) {
  std::ostringstream out;
  out << std::left << std::setw(5) << (r.passed() ? "PASS" : "FAIL") << std::setw(40) << r.claim
      << std::right << std::setw(9) << r.instances << "  " << r.range << "\n";
  for (const Counterexample &c : r.counterexamples)
    out << "      counterexample " << (c.graph6.empty() ? "-" : c.graph6) << "  " << c.details
        << "\n";
  for (const std::string &note : r.notes)
    out << "      note: " << note << "\n";
  return out.str();
}

} // namespace nearlyz
