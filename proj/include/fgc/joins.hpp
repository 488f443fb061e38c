#pragma once

#include <span>

#include "fgc/graph.hpp"

namespace fgc {

/// Largest |W| accepted by min_cardinality_wjoin (matching is a subset DP).
inline constexpr int kMaxJoinTerminals = 22;

/// Spanning tree with the most safe edges: Kruskal with safe edges first,
/// ties by edge id. Throws GraphError when the graph is disconnected.
EdgeSet safe_max_spanning_tree(const MultiGraph& graph);

/// Vertices of odd degree in (V, edges). `edges` may repeat ids.
VertexSet odd_degree_set(const MultiGraph& graph, std::span<const EdgeId> edges);

/// Minimum-cardinality edge set whose odd-degree set is exactly `terminals`.
/// Throws GraphError when no such set exists or |W| > kMaxJoinTerminals.
EdgeSet min_cardinality_wjoin(const MultiGraph& graph, VertexSet terminals);

}  // namespace fgc
