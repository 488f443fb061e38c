#pragma once

#include <vector>

#include "fgc/graph.hpp"

namespace fgc {

struct CutCollection {
  std::vector<CutSide> cuts;
  /// Global minimum cut value the collection is measured against.
  Rational reference_value;
  /// Every cut in the collection has weight at most radius * reference_value.
  Rational approximation_radius{1};

  [[nodiscard]] bool contains(VertexSet side) const;
};

/// Every canonical cut side with weight <= threshold, sorted by (weight,
/// lex order of the side). Edges of zero weight are ignored; the remaining
/// support must connect V (throws GraphError otherwise).
std::vector<CutSide> enumerate_cuts_up_to(const MultiGraph& graph, const EdgeWeights& weight,
                                          const Rational& threshold);

/// All cuts of weight at most alpha * lambda, lambda the global min cut.
CutCollection enumerate_near_min_cuts(const MultiGraph& graph, const EdgeWeights& weight,
                                      const Rational& alpha);

/// Cuts S with |delta_F(S)| = k. Empty when (V, F) is more than k-edge-connected;
/// throws GraphError when it is less than k-edge-connected.
CutCollection k_edge_cut_collection(const MultiGraph& graph, const EdgeSet& edges, int k);

/// Exhaustive scan over all 2^(n-1) - 1 bipartitions; used as a test oracle.
std::vector<CutSide> enumerate_cuts_bruteforce(const MultiGraph& graph, const EdgeWeights& weight,
                                               const Rational& threshold);

}  // namespace fgc
