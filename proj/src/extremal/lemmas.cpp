#include <algorithm>
#include <functional>
#include <string>

#include "nearlyz/extremal.hpp"
#include "nearlyz/graph6.hpp"
#include "nearlyz/invariants.hpp"
#include "nearlyz/tree_gen.hpp"

namespace nearlyz {

namespace {

struct PathValues {
  std::vector<BigCount> z0;
  std::vector<BigCount> z1;

  explicit PathValues(std::size_t max_n) {
    for (std::size_t k = 0; k <= max_n; ++k) {
      z0.push_back(z0_path_closed(k));
      z1.push_back(z1_path_closed(k));
    }
  }
};

std::string upto(std::size_t lo, std::size_t hi) {
  return std::to_string(lo) + " <= n <= " + std::to_string(hi);
}

void check(VerificationResult &r, bool ok, const std::string &details) {
  ++r.instances;
  if (!ok)
    r.counterexamples.push_back({"", details});
}

std::vector<VerificationResult> path_lemmas(std::size_t max_n) {
  const PathValues p(max_n);
  std::vector<VerificationResult> out;

  VerificationResult lower{"path-lower-bounds", upto(0, max_n), 0, {}, {}};
  for (std::size_t n = 0; n <= max_n; ++n) {
    const std::string at = " at n = " + std::to_string(n);
    check(lower, p.z0[n] >= BigCount(n), "Z_0(P_n) = " + p.z0[n].str() + " < n" + at);
    if (n >= 4)
      check(lower, p.z0[n] >= BigCount(n + 1), "Z_0(P_n) = " + p.z0[n].str() + " < n + 1" + at);
    if (n >= 3)
      check(lower, p.z1[n] >= BigCount(n - 2), "Z_1(P_n) = " + p.z1[n].str() + " < n - 2" + at);
  }
  out.push_back(std::move(lower));

  VerificationResult degree{"path-degree-bound", "d >= 5, d + 1 <= n <= " + std::to_string(max_n),
                            0, {}, {}};
  for (std::size_t n = 6; n <= max_n; ++n) {
    const BigCount rhs = p.z0[n - 3] + p.z1[n - 2];
    for (std::size_t d = 5; d + 1 <= n; ++d) {
      const BigCount lhs = BigCount(d - 1) * p.z0[n - d] + p.z1[n - d];
      check(degree, lhs <= rhs,
            "n = " + std::to_string(n) + ", d = " + std::to_string(d) + ": " + lhs.str() + " > " +
                rhs.str());
    }
  }
  out.push_back(std::move(degree));

  VerificationResult three{"path-bound-three", upto(7, max_n), 0, {}, {}};
  VerificationResult four{"path-bound-four", upto(7, max_n), 0, {}, {}};
  for (std::size_t n = 7; n <= max_n; ++n) {
    const BigCount rhs = p.z1[n - 2] + p.z0[n - 3];
    const BigCount lhs3 = p.z1[n - 3] + p.z0[n - 4] + p.z0[n - 3];
    const BigCount lhs4 = p.z1[n - 4] + p.z0[n - 5] + BigCount(2) * p.z0[n - 4];
    const std::string at = "n = " + std::to_string(n) + ": ";
    check(three, lhs3 <= rhs, at + lhs3.str() + " > " + rhs.str());
    check(four, lhs4 <= rhs, at + lhs4.str() + " > " + rhs.str());
    if (lhs3 == rhs)
      three.notes.push_back(at + "equality (" + rhs.str() + ")");
    if (lhs4 == rhs)
      four.notes.push_back(at + "equality (" + rhs.str() + ")");
  }
  three.notes.push_back("uses Z_0(P_5) = " + p.z0.at(5).str());
  out.push_back(std::move(three));
  out.push_back(std::move(four));
  return out;
}

VerificationResult hosoya_path_maximum(std::size_t max_n) {
  VerificationResult r{"tree-hosoya-at-most-path", upto(1, max_n), 0, {}, {}};
  for (std::size_t n = 1; n <= max_n; ++n) {
    const BigCount bound = z0_path_closed(n);
    FreeTreeEnumerator it(n);
    while (it.next()) {
      Graph t = it.graph();
      BigCount v = forest_counts(t).z0;
      ++r.instances;
      if (v > bound)
        r.counterexamples.push_back(
            {to_graph6(t), "Z_0 = " + v.str() + " > Z_0(P_n) = " + bound.str()});
    }
  }
  return r;
}

// Vertex set of the branch at `root` hanging off `v`.
std::vector<VertexId> branch_vertices(const Graph &t, VertexId v, VertexId root) {
  std::vector<VertexId> out{root};
  std::vector<bool> seen(t.order(), false);
  seen[v] = seen[root] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (VertexId w : t.neighbors(out[i]))
      if (!seen[w]) {
        seen[w] = true;
        out.push_back(w);
      }
  return out;
}

bool is_end_rooted_path(const Graph &t, VertexId root, const std::vector<VertexId> &branch) {
  for (VertexId x : branch) {
    const std::size_t inside = t.degree(x) - (x == root ? 1 : 0);
    if (inside > 2 || (x == root && inside > 1))
      return false;
  }
  return true;
}

// T with the branch replaced by a path of the same order attached by an end.
Graph iron(const Graph &t, VertexId v, const std::vector<VertexId> &branch) {
  Graph rest = delete_vertices(t, branch);
  VertexId new_v = v;
  for (VertexId x : branch)
    if (x < v)
      --new_v;
  std::vector<Edge> edges(rest.edges().begin(), rest.edges().end());
  auto prev = new_v;
  for (std::size_t i = 0; i < branch.size(); ++i) {
    auto next = static_cast<VertexId>(rest.order() + i);
    edges.emplace_back(prev, next);
    prev = next;
  }
  return Graph(t.order(), edges);
}

struct Tally {
  std::size_t instances = 0;
  std::size_t strict_failures = 0;
  std::size_t weak_failures = 0;
  std::string example;
};

std::string tally_note(std::size_t n, const Tally &t) {
  std::string s = "n = " + std::to_string(n) + " (not asserted): " + std::to_string(t.instances) +
                  " instances, " + std::to_string(t.strict_failures) + " without strict increase";
  if (t.weak_failures)
    s += ", " + std::to_string(t.weak_failures) + " with a decrease";
  if (!t.example.empty())
    s += ", e.g. " + t.example;
  return s;
}

std::vector<VerificationResult> ironing_lemmas(std::size_t max_n, std::size_t assert_from) {
  VerificationResult r0{"z0-ironing", upto(2, max_n), 0, {}, {}};
  VerificationResult r1{"z1-ironing", upto(std::max<std::size_t>(assert_from, 2), max_n), 0, {}, {}};
  for (std::size_t n = 2; n <= max_n; ++n) {
    Tally small;
    std::size_t weak_in_range = 0;
    FreeTreeEnumerator it(n);
    while (it.next()) {
      const Graph t = it.graph();
      const ForestCounts before = forest_counts(t);
      for (VertexId v = 0; v < n; ++v) {
        for (VertexId root : t.neighbors(v)) {
          auto branch = branch_vertices(t, v, root);
          if (is_end_rooted_path(t, root, branch))
            continue;
          const Graph ironed = iron(t, v, branch);
          const ForestCounts after = forest_counts(ironed);
          const std::string operands = "root " + std::to_string(v) + ", branch at " +
                                       std::to_string(root) + " of order " +
                                       std::to_string(branch.size()) + ", ironed " +
                                       to_graph6(ironed);
          ++r0.instances;
          if (!(before.z0 < after.z0))
            r0.counterexamples.push_back(
                {to_graph6(t), operands + ": Z_0 " + before.z0.str() + " vs " + after.z0.str()});
          const bool strict = before.z1 < after.z1;
          const bool weak = before.z1 <= after.z1;
          const std::string z1_text =
              operands + ": Z_1 " + before.z1.str() + " vs " + after.z1.str();
          if (n < assert_from) {
            ++small.instances;
            small.strict_failures += strict ? 0 : 1;
            small.weak_failures += weak ? 0 : 1;
            if (!strict && small.example.empty())
              small.example = to_graph6(t) + " " + z1_text;
            continue;
          }
          ++r1.instances;
          if (!strict)
            r1.counterexamples.push_back({to_graph6(t), z1_text});
          weak_in_range += weak ? 0 : 1;
        }
      }
    }
    if (n < assert_from && small.instances > 0)
      r1.notes.push_back(tally_note(n, small));
    else if (weak_in_range == 0)
      r1.notes.push_back("n = " + std::to_string(n) + ": non-strict inequality holds everywhere");
  }
  return {r0, r1};
}

void partitions(std::size_t total, std::size_t max_part, std::vector<std::size_t> &prefix,
                const std::function<void(const std::vector<std::size_t> &)> &visit) {
  if (total == 0) {
    visit(prefix);
    return;
  }
  for (std::size_t part = std::min(total, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(total - part, part, prefix, visit);
    prefix.pop_back();
  }
}

std::string spider_name(const std::vector<std::size_t> &branches) {
  std::string s = "[";
  for (std::size_t i = 0; i < branches.size(); ++i)
    s += (i ? ",P_" : "P_") + std::to_string(branches[i]);
  return s + "]";
}

VerificationResult merge_lemma(std::size_t max_n, std::size_t assert_from) {
  VerificationResult r{"branch-merge", upto(std::max<std::size_t>(assert_from, 4), max_n), 0, {}, {}};
  for (std::size_t n = 4; n <= max_n; ++n) {
    Tally small;
    std::vector<std::size_t> prefix;
    partitions(n - 1, n - 1, prefix, [&](const std::vector<std::size_t> &parts) {
      if (parts.size() < 3)
        return;
      std::vector<std::size_t> merged{parts[0] + parts[1]};
      merged.insert(merged.end(), parts.begin() + 2, parts.end());
      std::sort(merged.begin(), merged.end(), std::greater<>());
      const Graph before = make_family(FamilySpec::star_like(parts));
      const Graph after = make_family(FamilySpec::star_like(merged));
      const BigCount lhs = z1_tree_dp(before);
      const BigCount rhs = z1_tree_dp(after);
      const std::string text = spider_name(parts) + " " + lhs.str() + " vs " +
                               spider_name(merged) + " " + rhs.str();
      if (n < assert_from) {
        ++small.instances;
        small.strict_failures += lhs < rhs ? 0 : 1;
        small.weak_failures += lhs <= rhs ? 0 : 1;
        if (!(lhs < rhs) && small.example.empty())
          small.example = text;
        return;
      }
      ++r.instances;
      if (!(lhs < rhs))
        r.counterexamples.push_back({to_graph6(before), text});
    });
    if (n < assert_from)
      r.notes.push_back(tally_note(n, small));
  }
  return r;
}

} // namespace

std::vector<VerificationResult> verify_lemma_inequalities(const LemmaConfig &config) {
  std::vector<VerificationResult> out = path_lemmas(config.path_max_n);
  out.push_back(hosoya_path_maximum(config.hosoya_tree_max_n));
  for (auto &r : ironing_lemmas(config.ironing_max_n, config.assert_from_n))
    out.push_back(std::move(r));
  out.push_back(merge_lemma(config.merge_max_n, config.assert_from_n));
  return out;
}

} // namespace nearlyz
