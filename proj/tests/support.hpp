#pragma once

// Test-only reference implementations. They share nothing with the library
// beyond the graph container, so they can certify library results.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fgc/arborescence.hpp"
#include "fgc/graph.hpp"
#include "fgc/io.hpp"

namespace fgc::testing {

inline Rational weight_across(const MultiGraph& graph, const EdgeWeights& weight, std::uint64_t side) {
  Rational total;
  for (const auto& e : graph.edges()) {
    if (((side >> e.u) & 1U) != ((side >> e.v) & 1U)) total += weight[e.id];
  }
  return total;
}

/// Minimum over the 2^(n-1) - 1 bipartitions.
inline Rational brute_min_cut(const MultiGraph& graph, const EdgeWeights& weight) {
  const int n = graph.vertex_count();
  std::optional<Rational> best;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << (n - 1)); ++s) {
    Rational w = weight_across(graph, weight, s << 1);
    if (!best || w < *best) best = w;
  }
  return *best;
}

/// Canonical sides (never containing vertex 0) of weight <= threshold.
inline std::vector<std::uint64_t> brute_cuts(const MultiGraph& graph, const EdgeWeights& weight,
                                             const Rational& threshold) {
  const int n = graph.vertex_count();
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << (n - 1)); ++s) {
    if (weight_across(graph, weight, s << 1) <= threshold) out.push_back(s << 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every S subset of V - {root} has at least k entering arcs among `arcs`.
inline bool rooted_cut_condition(const Digraph& d, const std::vector<ArcId>& arcs, Vertex root, int k) {
  const int n = d.vertex_count;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if ((s >> root) & 1U) continue;
    int entering = 0;
    for (ArcId a : arcs) {
      const Arc& arc = d.arcs[a];
      if (!((s >> arc.tail) & 1U) && ((s >> arc.head) & 1U)) ++entering;
    }
    if (entering < k) return false;
  }
  return true;
}

/// Exhaustive minimum-cost k-arborescence over arc subsets of size k(n-1).
inline std::optional<Rational> brute_arborescence(const Digraph& d, Vertex root, int k) {
  const int n = d.vertex_count;
  const int m = static_cast<int>(d.arcs.size());
  const int want = k * (n - 1);
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != want) continue;
    std::vector<ArcId> arcs;
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    Rational cost;
    for (int a = 0; a < m; ++a) {
      if ((mask >> a) & 1U) {
        arcs.push_back(a);
        ++indeg[d.arcs[a].head];
        cost += d.arcs[a].cost;
      }
    }
    bool degrees = true;
    for (int v = 0; v < n; ++v) degrees = degrees && indeg[v] == (v == root ? 0 : k);
    if (!degrees || (best && cost >= *best)) continue;
    if (rooted_cut_condition(d, arcs, root, k)) best = cost;
  }
  return best;
}

/// Smallest edge subset whose odd-degree vertex set equals `terminals`.
inline std::optional<int> brute_wjoin_size(const MultiGraph& graph, std::uint64_t terminals) {
  const int m = graph.edge_count();
  std::optional<int> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t odd = 0;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) odd ^= (std::uint64_t{1} << graph.edge(i).u) ^ (std::uint64_t{1} << graph.edge(i).v);
    }
    if (odd == terminals && (!best || std::popcount(mask) < *best)) best = std::popcount(mask);
  }
  return best;
}

inline Digraph random_digraph(std::mt19937_64& rng, int n, int arcs, int max_cost) {
  Digraph d;
  d.vertex_count = n;
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::uniform_int_distribution<int> cost(0, max_cost);
  while (static_cast<int>(d.arcs.size()) < arcs) {
    const int u = vertex(rng);
    const int v = vertex(rng);
    if (u == v) continue;
    d.arcs.push_back({u, v, Rational(cost(rng)), -1});
  }
  return d;
}

inline MultiGraph random_graph(std::mt19937_64& rng, int n, int m, std::int64_t cost_max, std::int64_t cap_max = 1,
                               double safe_probability = 0.5) {
  RandomGraphOptions options;
  options.n = n;
  options.m = m;
  options.cost_min = 1;
  options.cost_max = cost_max;
  options.capacity_min = 1;
  options.capacity_max = cap_max;
  options.safe_probability = safe_probability;
  options.seed = rng();
  return gen_random(options);
}

}  // namespace fgc::testing
