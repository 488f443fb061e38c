#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fgc/cuts.hpp"
#include "fgc/graph.hpp"

namespace fgc {

/// 0/1 requirement function given by an explicit family of vertex sets.
///
/// Sets are stored as given, without canonicalization: minimality of a
/// violated set depends on which side is meant, so {S} and {V - S} are both
/// kept when the function is symmetric.
class RequirementOracle {
 public:
  RequirementOracle() = default;

  /// Symmetric function: f(S) = f(V - S) = 1 for every listed side.
  static RequirementOracle symmetric(int n, const std::vector<CutSide>& sides);
  /// f(S) = 1 exactly for the listed sets. May be non-symmetric.
  static RequirementOracle from_sets(int n, std::vector<VertexSet> sets);

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] bool evaluate(VertexSet set) const;
  /// All sets with f = 1, sorted by lex_less.
  [[nodiscard]] const std::vector<VertexSet>& active_sets() const { return sets_; }
  [[nodiscard]] bool identically_zero() const { return sets_.empty(); }

 private:
  int n_ = 0;
  std::vector<VertexSet> sets_;
};

/// f(S) = 1 iff S is in `collection` and delta(S) meets an unsafe edge of f1.
RequirementOracle build_requirement(const CutCollection& collection, const EdgeSet& f1, const MultiGraph& graph);

/// Inclusion-minimal sets S with f(S) = 1 that no edge of `chosen` crosses.
std::vector<VertexSet> minimal_violated_sets(const RequirementOracle& oracle, const MultiGraph& graph,
                                             const EdgeSet& chosen);

struct DualState {
  /// Dual value per set (keyed by the raw bit mask).
  std::map<std::uint64_t, Rational> values;
  Rational total;
};

struct WgmvResult {
  EdgeSet augmentation;
  DualState dual;
  /// Edges in the order they became tight, before reverse delete.
  std::vector<EdgeId> addition_order;
  int phases = 0;
};

/// Primal-dual augmentation over the candidate edges. Throws
/// std::runtime_error("augmentation infeasible") when some set with f = 1 has
/// no crossing candidate.
WgmvResult wgmv_solve(const MultiGraph& graph, const EdgeSet& candidates, const RequirementOracle& oracle);

/// sum over sets crossed by e of y_S <= c_e for every candidate e.
bool dual_feasible(const MultiGraph& graph, const EdgeSet& candidates, const DualState& dual);

/// True iff every f = 1 set is crossed by some edge of `chosen`.
bool covers_requirement(const RequirementOracle& oracle, const MultiGraph& graph, const EdgeSet& chosen);

/// Symmetry plus the uncrossing condition over all pairs of f = 1 sets.
/// Scans all 2^n subsets for symmetry; meant for n <= 12.
bool is_uncrossable_bruteforce(const RequirementOracle& oracle);

}  // namespace fgc
