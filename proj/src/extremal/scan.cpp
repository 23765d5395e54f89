#include <algorithm>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "nearlyz/extremal.hpp"
#include "nearlyz/graph6.hpp"
#include "nearlyz/invariants.hpp"
#include "nearlyz/tree_gen.hpp"

namespace nearlyz {

namespace {

struct Level {
  BigCount value;
  std::vector<std::vector<int>> trees; // level sequences
};

// Keeps the two best distinct values seen on one side, with every tree
// attaining them.
class SideTracker {
public:
  explicit SideTracker(bool high) : high_(high) {}

  void offer(const BigCount &value, std::span<const int> levels) {
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      if (ranks_[i].value == value) {
        ranks_[i].trees.emplace_back(levels.begin(), levels.end());
        return;
      }
      if (better(value, ranks_[i].value)) {
        ranks_.insert(ranks_.begin() + static_cast<std::ptrdiff_t>(i),
                      Level{value, {std::vector<int>(levels.begin(), levels.end())}});
        if (ranks_.size() > 2)
          ranks_.pop_back();
        return;
      }
    }
    if (ranks_.size() < 2)
      ranks_.push_back(Level{value, {std::vector<int>(levels.begin(), levels.end())}});
  }

  void merge(const SideTracker &other) {
    for (const Level &level : other.ranks_)
      for (const auto &t : level.trees)
        offer(level.value, t);
  }

  const std::vector<Level> &ranks() const { return ranks_; }

private:
  bool better(const BigCount &a, const BigCount &b) const { return high_ ? a > b : a < b; }

  bool high_;
  std::vector<Level> ranks_;
};

struct WorkerResult {
  SideTracker low{false};
  SideTracker high{true};
  std::uint64_t trees = 0;
};

BigCount tree_value(const Graph &t) {
  if (auto fast = z1_tree_dp_u64(t))
    return BigCount(*fast);
  return z1_tree_dp(t);
}

void run_worker(std::size_t n, std::size_t worker, const ScanOptions &options, WorkerResult &out) {
  FreeTreeEnumerator it(n);
  const std::uint64_t chunk = std::max<std::size_t>(options.chunk, 1);
  while (it.next()) {
    if ((it.index() / chunk) % options.jobs != worker)
      continue;
    BigCount value = tree_value(it.graph());
    out.low.offer(value, it.level_sequence());
    out.high.offer(value, it.level_sequence());
    ++out.trees;
  }
}

ExtremeEntry finish(const Level &level) {
  ExtremeEntry entry{level.value, {}};
  for (const auto &levels : level.trees) {
    Graph t = graph_from_level_sequence(levels);
    entry.witnesses.push_back({canonical_tree_code(t), to_graph6(t), describe_tree(t)});
  }
  std::sort(entry.witnesses.begin(), entry.witnesses.end(),
            [](const Witness &a, const Witness &b) { return a.code < b.code; });
  return entry;
}

} // namespace

ExtremalReport scan_order(std::size_t n, const ScanOptions &options) {
  if (n < options.min_order || n > options.max_order || n > kMaxEnumerationOrder)
    throw std::out_of_range("scan order " + std::to_string(n) + " outside [" +
                            std::to_string(options.min_order) + ", " +
                            std::to_string(std::min(options.max_order, kMaxEnumerationOrder)) + "]");
  if (options.jobs == 0)
    throw std::invalid_argument("scan needs at least one job");

  const auto start = std::chrono::steady_clock::now();
  std::vector<WorkerResult> results(options.jobs);
  if (options.jobs == 1) {
    run_worker(n, 0, options, results[0]);
  } else {
    std::vector<std::exception_ptr> errors(options.jobs);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < options.jobs; ++w)
      threads.emplace_back([&, w] {
        try {
          run_worker(n, w, options, results[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto &t : threads)
      t.join();
    for (auto &e : errors)
      if (e)
        std::rethrow_exception(e);
  }

  WorkerResult total;
  for (const WorkerResult &r : results) {
    total.low.merge(r.low);
    total.high.merge(r.high);
    total.trees += r.trees;
  }

  ExtremalReport report;
  report.n = n;
  report.tree_count = total.trees;
  const auto &low = total.low.ranks();
  const auto &high = total.high.ranks();
  report.min = finish(low.at(0));
  if (low.size() > 1)
    report.second_min = finish(low[1]);
  report.max = finish(high.at(0));
  if (high.size() > 1)
    report.second_max = finish(high[1]);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace nearlyz
