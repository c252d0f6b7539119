#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace antiramsey::detail {

/// Dinic's algorithm on integer capacities.
class MaxFlow {
 public:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(std::size_t nodes) : graph_(nodes), level_(nodes), next_(nodes) {}

  void add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
    graph_[from].push_back({to, graph_[to].size(), capacity});
    graph_[to].push_back({from, graph_[from].size() - 1, 0});
  }

  std::int64_t run(std::size_t source, std::size_t sink) {
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (const auto pushed = augment(source, sink, kInfinite)) total += pushed;
    }
    return total;
  }

  /// Nodes reachable from `source` in the residual graph after run().
  [[nodiscard]] std::vector<bool> source_side(std::size_t source) const {
    std::vector<bool> seen(graph_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (const auto& arc : graph_[u]) {
        if (arc.capacity > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    std::size_t reverse;
    std::int64_t capacity;
  };

  bool build_levels(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop();
      for (const auto& arc : graph_[u]) {
        if (arc.capacity > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[u] + 1;
          queue.push(arc.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t augment(std::size_t u, std::size_t sink, std::int64_t limit) {
    if (u == sink) return limit;
    for (auto& i = next_[u]; i < graph_[u].size(); ++i) {
      auto& arc = graph_[u][i];
      if (arc.capacity <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (const auto pushed = augment(arc.to, sink, std::min(limit, arc.capacity))) {
        arc.capacity -= pushed;
        graph_[arc.to][arc.reverse].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace antiramsey::detail
