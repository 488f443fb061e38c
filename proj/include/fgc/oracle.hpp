#pragma once

#include <cstdint>
#include <optional>

#include "fgc/hitting_set.hpp"
#include "fgc/instance.hpp"

namespace fgc {

/// Largest edge count brute_force_opt accepts.
inline constexpr int kMaxOracleEdges = 24;
/// Largest element count brute_force_min_hitting_set accepts.
inline constexpr int kMaxOracleElements = 20;

struct OracleResult {
  /// Empty when the instance is infeasible.
  std::optional<Rational> optimum;
  /// Among optimal solutions, the one with the smallest bit mask over ids.
  EdgeSet witness;
  /// Search nodes visited. Depends on the thread schedule in parallel runs.
  std::int64_t explored = 0;

  [[nodiscard]] bool feasible() const { return optimum.has_value(); }
};

/// Literal definition: for every F' subset of the unsafe edges of F with
/// |F'| <= q, (V, F - F') is p-edge-connected.
bool brute_force_feasible(const FgcInstance& instance, const EdgeSet& f);

/// Exact optimum by depth-first search over edge subsets with cost and
/// feasibility pruning. The parallel version splits on the first edges; the
/// optimum and witness do not depend on the split.
OracleResult brute_force_opt(const FgcInstance& instance);
OracleResult brute_force_opt_serial(const FgcInstance& instance);
OracleResult brute_force_opt(const CapEcssInstance& instance);
OracleResult brute_force_opt_serial(const CapEcssInstance& instance);

/// Exact minimum-cost hitting set over all element subsets. The witness lists
/// element indices.
OracleResult brute_force_min_hitting_set(const HittingSetProblem& problem);
OracleResult brute_force_min_hitting_set_serial(const HittingSetProblem& problem);

}  // namespace fgc
