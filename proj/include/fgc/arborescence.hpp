#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "fgc/graph.hpp"

namespace fgc {

using ArcId = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  Rational cost;
  /// Undirected edge this arc was generated from (-1 when built by hand).
  EdgeId origin = -1;
};

/// Directed multigraph; arcs are identified by their index.
struct Digraph {
  int vertex_count = 0;
  std::vector<Arc> arcs;
};

class ArborescenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Union of k arc-disjoint spanning arborescences rooted at `root`.
struct KArborescence {
  Vertex root = 0;
  int k = 1;
  /// Sorted arc indices; size k * (n - 1).
  std::vector<ArcId> arc_ids;
  Rational cost;
};

/// Replaces each edge e = uv by multiplicity[e] pairs (u,v), (v,u), each
/// carrying c_e and origin e. Arcs are emitted in edge id order.
Digraph bidirect(const MultiGraph& graph, std::span<const std::int64_t> multiplicity);

/// True iff every nonempty S avoiding the root has at least k entering arcs
/// (checked as min over v of the unit-capacity max flow root -> v).
bool has_k_arborescence(const Digraph& digraph, Vertex root, int k);

/// Same test restricted to a sub-multiset of arcs.
bool has_k_arborescence(const Digraph& digraph, std::span<const ArcId> arcs, Vertex root, int k);

enum class ArborescenceMethod {
  Automatic,    // contraction for k = 1, cut LP otherwise
  Contraction,  // classical min-cost arborescence; k = 1 only
  CutLp,        // branch-and-bound over the cut-covering LP
};

struct ArborescenceStats {
  int lp_solves = 0;
  int cuts_added = 0;
  int branch_nodes = 0;
  int pivots = 0;
};

/// Exact minimum-cost k-arborescence. Throws ArborescenceError("no
/// k-arborescence") when none exists.
KArborescence min_cost_k_arborescence(const Digraph& digraph, Vertex root, int k,
                                      ArborescenceMethod method = ArborescenceMethod::Automatic,
                                      ArborescenceStats* stats = nullptr);

/// Checks the structural invariants: k(n-1) distinct arcs, root in-degree 0,
/// in-degree k elsewhere, and rooted k-connectivity.
bool is_k_arborescence(const Digraph& digraph, const KArborescence& tree);

/// Splits a k-arborescence into k arc-disjoint spanning arborescences.
std::vector<std::vector<ArcId>> decompose_k_arborescence(const Digraph& digraph, const KArborescence& tree);

/// Distinct origin edges of the arcs in `tree`.
EdgeSet project_arcs_to_edges(const KArborescence& tree, const Digraph& digraph);

}  // namespace fgc
