#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>
#include <string>

#include "nearlyz/extremal.hpp"
#include "nearlyz/graph6.hpp"
#include "nearlyz/invariants.hpp"
#include "nearlyz/tree_gen.hpp"

namespace nearlyz {

namespace {

const std::vector<GoldenTable> &embedded() {
  static const std::vector<GoldenTable> tables = {
#include "golden_tables.inc"
  };
  return tables;
}

BigCount tree_z1(const Graph &t) {
  if (auto fast = z1_tree_dp_u64(t))
    return BigCount(*fast);
  return z1_tree_dp(t);
}

} // namespace

const GoldenTable &golden_table(std::size_t n) {
  for (const GoldenTable &t : embedded())
    if (t.n == n)
      return t;
  throw std::out_of_range("no embedded table for n = " + std::to_string(n));
}

GoldenTable parse_golden_csv(std::size_t n, std::string_view text) {
  GoldenTable table{n, {}, {}};
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    const std::size_t line_start = pos;
    pos = end + 1;
    if (line.empty())
      continue;
    if (header) {
      header = false;
      if (line != "index,value")
        throw ParseError("expected header 'index,value'", line_start);
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos)
      throw ParseError("expected 'index,value'", line_start);
    std::uint64_t index = 0;
    std::uint64_t value = 0;
    auto parse = [&](std::string_view field, std::uint64_t &out, std::size_t offset) {
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
      if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
        throw ParseError("bad number '" + std::string(field) + "'", offset);
    };
    parse(line.substr(0, comma), index, line_start);
    parse(line.substr(comma + 1), value, line_start + comma + 1);
    if (index != table.values.size() + 1)
      throw ParseError("row index " + std::to_string(index) + " out of sequence", line_start);
    table.values.push_back(value);
  }
  if (header)
    throw ParseError("empty table", 0);
  return table;
}

VerificationResult verify_table(const GoldenTable &table) {
  VerificationResult result;
  result.claim = "table-z1-n" + std::to_string(table.n);
  result.range = "n = " + std::to_string(table.n);

  // Enumerated values with one representative tree per value.
  std::map<std::uint64_t, std::pair<std::size_t, std::string>> computed;
  std::vector<CanonicalTreeCode> codes;
  FreeTreeEnumerator it(table.n);
  while (it.next()) {
    Graph t = it.graph();
    BigCount v = tree_z1(t);
    auto &slot = computed[static_cast<std::uint64_t>(v.raw())];
    if (slot.first++ == 0)
      slot.second = to_graph6(t);
    ++result.instances;
  }

  std::map<std::uint64_t, std::size_t> printed;
  for (std::uint64_t v : table.values)
    ++printed[v];

  if (table.values.size() != result.instances)
    result.counterexamples.push_back(
        {"", "table lists " + std::to_string(table.values.size()) + " values, there are " +
                 std::to_string(result.instances) + " trees"});
  std::map<std::uint64_t, bool> keys;
  for (auto &[v, _] : printed)
    keys[v] = true;
  for (auto &[v, _] : computed)
    keys[v] = true;
  for (auto &[v, _] : keys) {
    const std::size_t in_table = printed.count(v) ? printed[v] : 0;
    const std::size_t in_trees = computed.count(v) ? computed[v].first : 0;
    if (in_table != in_trees)
      result.counterexamples.push_back(
          {in_trees ? computed[v].second : "",
           "Z_1 = " + std::to_string(v) + ": table " + std::to_string(in_table) + "x, trees " +
               std::to_string(in_trees) + "x"});
  }

  if (table.drawings.empty())
    return result;
  if (table.drawings.size() != table.values.size()) {
    result.counterexamples.push_back({"", "drawing list and value list differ in length"});
    return result;
  }
  std::map<CanonicalTreeCode, std::vector<std::size_t>> drawn;
  for (std::size_t i = 0; i < table.drawings.size(); ++i) {
    Graph t = parse_graph6(table.drawings[i]);
    if (t.order() != table.n || !t.is_tree()) {
      result.counterexamples.push_back(
          {table.drawings[i], "entry " + std::to_string(i + 1) + " is not a tree of order n"});
      continue;
    }
    BigCount v = tree_z1(t);
    if (v != BigCount(table.values[i]))
      result.counterexamples.push_back(
          {table.drawings[i], "entry " + std::to_string(i + 1) + " prints " +
                                  std::to_string(table.values[i]) + ", drawing has Z_1 = " + v.str()});
    drawn[canonical_tree_code(t)].push_back(i + 1);
  }
  for (auto &[code, entries] : drawn) {
    if (entries.size() < 2)
      continue;
    std::string list;
    for (std::size_t e : entries)
      list += (list.empty() ? "" : ", ") + std::to_string(e);
    result.notes.push_back("entries " + list + " draw isomorphic trees (" +
                           describe_tree(parse_graph6(table.drawings[entries[0] - 1])) + ")");
  }
  FreeTreeEnumerator all(table.n);
  while (all.next()) {
    Graph t = all.graph();
    if (!drawn.count(canonical_tree_code(t)))
      result.notes.push_back("not drawn: " + describe_tree(t) + " " + to_graph6(t) +
                             " (Z_1 = " + tree_z1(t).str() + ")");
  }
  return result;
}

VerificationResult verify_table(std::size_t n) { return verify_table(golden_table(n)); }

} // namespace nearlyz
