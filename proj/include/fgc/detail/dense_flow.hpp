#pragma once

// Dense-matrix flow and cut kernels for graphs with at most 64 vertices.
// Templated on the weight type so rational costs and integer capacities
// share one implementation.

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

namespace fgc::detail {

template <typename W>
class DenseMatrix {
 public:
  explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, W(0)) {}
  W& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const W& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  [[nodiscard]] int size() const { return n_; }

 private:
  int n_;
  std::vector<W> data_;
};

template <typename W>
struct FlowResult {
  W value;
  /// Vertices reachable from the source in the final residual graph.
  std::uint64_t source_side;
};

/// Edmonds-Karp max flow on a directed capacity matrix. Sources and sinks are
/// vertex masks (multi-terminal); they must be disjoint and nonempty.
/// Stops early once `limit` is reached when provided.
template <typename W>
FlowResult<W> max_flow(DenseMatrix<W> residual, std::uint64_t sources, std::uint64_t sinks,
                       std::optional<W> limit = std::nullopt) {
  const int n = residual.size();
  W total(0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  const auto bfs = [&]() -> int {
    std::fill(parent.begin(), parent.end(), -2);
    std::queue<int> queue;
    for (int v = 0; v < n; ++v) {
      if ((sources >> v) & 1U) {
        parent[v] = -1;
        queue.push(v);
      }
    }
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v = 0; v < n; ++v) {
        if (parent[v] != -2 || !(residual(u, v) > W(0))) continue;
        parent[v] = u;
        if ((sinks >> v) & 1U) return v;
        queue.push(v);
      }
    }
    return -1;
  };
  while (!limit || total < *limit) {
    const int end = bfs();
    if (end < 0) break;
    W bottleneck = residual(parent[end], end);
    for (int v = end; parent[v] >= 0; v = parent[v]) {
      if (residual(parent[v], v) < bottleneck) bottleneck = residual(parent[v], v);
    }
    for (int v = end; parent[v] >= 0; v = parent[v]) {
      residual(parent[v], v) -= bottleneck;
      residual(v, parent[v]) += bottleneck;
    }
    total += bottleneck;
  }
  // Recompute reachability for the cut even when stopped at the limit.
  std::uint64_t reach = 0;
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    if ((sources >> v) & 1U) {
      reach |= std::uint64_t{1} << v;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (!((reach >> v) & 1U) && residual(u, v) > W(0)) {
        reach |= std::uint64_t{1} << v;
        stack.push_back(v);
      }
    }
  }
  return {total, reach};
}

template <typename W>
struct StoerWagnerResult {
  W value;
  std::uint64_t side;
};

/// Stoer-Wagner maximum-adjacency-ordering min cut on a symmetric weight
/// matrix. Requires n >= 2. Deterministic: ties in the ordering go to the
/// smallest vertex index.
template <typename W>
StoerWagnerResult<W> stoer_wagner(DenseMatrix<W> weight) {
  const int n = weight.size();
  std::vector<std::uint64_t> merged(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) merged[v] = std::uint64_t{1} << v;
  std::vector<int> alive(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) alive[v] = v;

  std::optional<W> best;
  std::uint64_t best_side = 0;
  std::vector<W> key(static_cast<std::size_t>(n), W(0));
  std::vector<char> added(static_cast<std::size_t>(n), 0);
  while (alive.size() > 1) {
    for (int v : alive) {
      key[v] = W(0);
      added[v] = 0;
    }
    int prev = -1;
    int last = -1;
    for (std::size_t step = 0; step < alive.size(); ++step) {
      int pick = -1;
      for (int v : alive) {
        if (added[v]) continue;
        if (pick < 0 || key[v] > key[pick]) pick = v;
      }
      if (pick < 0) break;
      added[pick] = 1;
      prev = last;
      last = pick;
      for (int v : alive) {
        if (!added[v]) key[v] += weight(pick, v);
      }
    }
    if (!best || key[last] < *best) {
      best = key[last];
      best_side = merged[last];
    }
    // Merge `last` into `prev`.
    merged[prev] |= merged[last];
    for (int v : alive) {
      if (v == prev || v == last) continue;
      weight(prev, v) += weight(last, v);
      weight(v, prev) = weight(prev, v);
    }
    std::erase(alive, last);
  }
  return {*best, best_side};
}

}  // namespace fgc::detail
