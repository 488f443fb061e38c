#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fgc/cuts.hpp"
#include "fgc/hitting_set.hpp"
#include "fgc/instance.hpp"
#include "fgc/primal_dual.hpp"

namespace fgc {

/// Unweighted 2-ECSS subroutine: returns a 2-edge-connected spanning subgraph.
using TwoEcssRoutine = std::function<EdgeSet(const MultiGraph&)>;
/// Unweighted k-ECSS subroutine.
using KEcssRoutine = std::function<EdgeSet(const MultiGraph&, int k)>;

struct SolverConfig {
  /// Declared factor of `two_ecss`; enters the reported guarantee only.
  Rational two_ecss_factor{2};
  /// Declared factor of `k_ecss`.
  Rational k_ecss_factor{2};
  std::uint64_t random_seed = 0;
  /// Empty means the built-in arborescence routine (factor 2).
  TwoEcssRoutine two_ecss;
  KEcssRoutine k_ecss;
};

/// Second stage of the (k,1) solver.
struct K1Trace {
  EdgeSet stage1;
  CutCollection tight_cuts;
  RequirementOracle requirement;
  EdgeSet candidates;
  WgmvResult augmentation;
};

/// One round of the (p,q) augmentation loop.
struct HittingSetRound {
  std::vector<CutSide> deficient;
  HittingSetProblem problem;
  /// Element index -> edge id.
  std::vector<EdgeId> element_edges;
  std::vector<int> chosen;
  Rational cost;
};

struct UnweightedFgcTrace {
  EdgeSet tree;
  /// W-join in the contracted graph, as original edge ids.
  EdgeSet join;
  EdgeSet join_candidate;
  EdgeSet ecss_candidate;
  /// Edges added to repair a bridge left after de-duplication.
  std::vector<EdgeId> repairs;
};

struct SolveReport {
  EdgeSet solution;
  Rational cost;
  /// A priori ratio bound of the algorithm that ran.
  Rational guarantee;
  /// Certified lower bound on OPT when the algorithm yields one.
  std::optional<Rational> lower_bound;
  int iterations = 0;
  std::vector<Rational> stage_costs;

  std::optional<K1Trace> k1;
  std::vector<HittingSetRound> rounds;
  std::optional<UnweightedFgcTrace> unweighted;
};

/// (1,k)-FGC with k = q via a (k+1)-arborescence. Guarantee k+1.
SolveReport solve_1k(const FgcInstance& instance, const SolverConfig& config = {});

/// Cap-k-ECSS via a k-arborescence on u_e bidirected pairs per edge.
/// Guarantee min(k, 2 u_max).
SolveReport solve_cap_kecss(const CapEcssInstance& instance);

/// (k,1)-FGC with k = p: k-ECSS, then primal-dual augmentation. Guarantee 4.
SolveReport solve_k1(const FgcInstance& instance, const SolverConfig& config = {});

/// (p,q)-FGC: capacitated stage 1 followed by at most q hitting-set rounds.
/// q = 0 and q = 1 dispatch to solve_cap_kecss and solve_k1. The reported
/// guarantee is the stage-1 factor plus H(|C_i|) for each round i that ran.
SolveReport solve_pq(const FgcInstance& instance, const SolverConfig& config = {});

/// Unweighted 2-ECSS through solve_cap_kecss with unit costs and capacities.
EdgeSet two_ecss_unweighted(const MultiGraph& graph);

/// Unweighted (1,1)-FGC: best of the join-based and the 2-ECSS-based
/// candidates. Guarantee 4a/(2a+1) for the configured 2-ECSS factor a.
SolveReport solve_unweighted_fgc(const FgcInstance& instance, const SolverConfig& config = {});

/// Unweighted (k,1)-FGC with a pluggable k-ECSS stage. Guarantee 2 + a_k.
SolveReport solve_unweighted_k1(const FgcInstance& instance, const SolverConfig& config = {});

/// Maximal safe forest, then cheapest edges until (1,1)-feasible, then
/// reverse delete of the added edges.
EdgeSet forest_first_baseline(const FgcInstance& instance);

}  // namespace fgc
