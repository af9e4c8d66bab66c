#pragma once

// Dinic max-flow on small integer capacities. Internal to the library.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <vector>

namespace rigidpack::detail {

class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  std::size_t num_nodes() const { return adj_.size(); }

  /// Returns the arc index (its reverse is index ^ 1).
  std::size_t add_arc(std::size_t from, std::size_t to, long long cap) {
    std::size_t id = arcs_.size();
    arcs_.push_back({to, cap});
    adj_[from].push_back(id);
    arcs_.push_back({from, 0});
    adj_[to].push_back(id + 1);
    return id;
  }

  long long residual(std::size_t arc) const { return arcs_[arc].cap; }
  long long flow(std::size_t arc) const { return arcs_[arc ^ 1].cap; }
  std::size_t head(std::size_t arc) const { return arcs_[arc].to; }

  /// Pushes up to `limit` units from s to t in blocking-flow phases.
  long long max_flow(std::size_t s, std::size_t t, long long limit = std::numeric_limits<long long>::max()) {
    long long total = 0;
    while (total < limit && bfs(s, t)) {
      it_.assign(adj_.size(), 0);
      while (total < limit) {
        long long pushed = dfs(s, t, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Nodes reachable from s in the residual network.
  std::vector<bool> reachable(std::size_t s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto id : adj_[x]) {
        const auto& a = arcs_[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

  const std::vector<std::size_t>& out_arcs(std::size_t node) const { return adj_[node]; }

 private:
  struct ArcData {
    std::size_t to;
    long long cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    level_.assign(adj_.size(), -1);
    std::deque<std::size_t> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto id : adj_[x]) {
        const auto& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[x] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(std::size_t x, std::size_t t, long long pushed) {
    if (x == t) return pushed;
    for (auto& i = it_[x]; i < adj_[x].size(); ++i) {
      auto id = adj_[x][i];
      auto& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[x] + 1) continue;
      long long got = dfs(a.to, t, std::min(pushed, a.cap));
      if (got > 0) {
        a.cap -= got;
        arcs_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<ArcData> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace rigidpack::detail
