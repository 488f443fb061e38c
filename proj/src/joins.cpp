#include "fgc/joins.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace fgc {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

struct BfsTree {
  std::vector<int> dist;
  std::vector<EdgeId> pred;
};

BfsTree bfs(const MultiGraph& graph, const std::vector<std::vector<EdgeId>>& adjacency, Vertex source) {
  const int n = graph.vertex_count();
  BfsTree tree{std::vector<int>(static_cast<std::size_t>(n), -1), std::vector<EdgeId>(static_cast<std::size_t>(n), -1)};
  std::deque<Vertex> queue{source};
  tree.dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (EdgeId id : adjacency[x]) {
      const auto& e = graph.edge(id);
      const Vertex y = e.u == x ? e.v : e.u;
      if (tree.dist[y] >= 0) continue;
      tree.dist[y] = tree.dist[x] + 1;
      tree.pred[y] = id;
      queue.push_back(y);
    }
  }
  return tree;
}

}  // namespace

EdgeSet safe_max_spanning_tree(const MultiGraph& graph) {
  const int n = graph.vertex_count();
  DisjointSets sets(n);
  EdgeSet tree;
  for (const bool want_safe : {true, false}) {
    for (const auto& e : graph.edges()) {
      if (e.safe() == want_safe && sets.unite(e.u, e.v)) tree.push_back(e.id);
    }
  }
  if (static_cast<int>(tree.size()) != n - 1) throw GraphError("graph is disconnected");
  std::sort(tree.begin(), tree.end());
  return tree;
}

VertexSet odd_degree_set(const MultiGraph& graph, std::span<const EdgeId> edges) {
  VertexSet odd;
  for (EdgeId id : edges) {
    const auto& e = graph.edge(id);
    odd = VertexSet(odd.bits() ^ (std::uint64_t{1} << e.u) ^ (std::uint64_t{1} << e.v));
  }
  return odd;
}

EdgeSet min_cardinality_wjoin(const MultiGraph& graph, VertexSet terminals) {
  const auto w = terminals.members();
  const int t = static_cast<int>(w.size());
  if (t % 2 != 0) throw GraphError("terminal set has odd size");
  if (t > kMaxJoinTerminals) throw GraphError("too many join terminals");
  if (!terminals.subset_of(VertexSet::full(graph.vertex_count()))) throw GraphError("terminal out of range");
  if (t == 0) return {};

  std::vector<std::vector<EdgeId>> adjacency(static_cast<std::size_t>(graph.vertex_count()));
  for (const auto& e : graph.edges()) {
    adjacency[e.u].push_back(e.id);
    adjacency[e.v].push_back(e.id);
  }
  std::vector<BfsTree> trees;
  trees.reserve(w.size());
  for (Vertex s : w) trees.push_back(bfs(graph, adjacency, s));

  // dp[mask]: cheapest perfect matching of the terminals in mask, pairing the
  // lowest terminal first.
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  const std::size_t states = std::size_t{1} << t;
  std::vector<int> dp(states, kInf);
  std::vector<signed char> partner(states, -1);
  dp[0] = 0;
  for (std::size_t mask = 1; mask < states; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    const int i = std::countr_zero(mask);
    for (int j = i + 1; j < t; ++j) {
      if (!((mask >> j) & 1U)) continue;
      const int d = trees[i].dist[w[j]];
      if (d < 0) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
      if (dp[rest] >= kInf) continue;
      if (dp[rest] + d < dp[mask]) {
        dp[mask] = dp[rest] + d;
        partner[mask] = static_cast<signed char>(j);
      }
    }
  }
  if (dp[states - 1] >= kInf) throw GraphError("no W-join exists");

  std::vector<char> parity(static_cast<std::size_t>(graph.edge_count()), 0);
  for (std::size_t mask = states - 1; mask != 0;) {
    const int i = std::countr_zero(mask);
    const int j = partner[mask];
    for (Vertex x = w[j]; x != w[i];) {
      const EdgeId id = trees[i].pred[x];
      parity[id] ^= 1;
      const auto& e = graph.edge(id);
      x = e.u == x ? e.v : e.u;
    }
    mask &= ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
  }
  EdgeSet join;
  for (EdgeId id = 0; id < graph.edge_count(); ++id) {
    if (parity[id]) join.push_back(id);
  }
  return join;
}

}  // namespace fgc
