#pragma once

#include <span>
#include <stdexcept>

#include "fgc/graph.hpp"

namespace fgc {

/// (p,q)-FGC: after deleting any q unsafe edges the solution stays
/// p-edge-connected.
struct FgcInstance {
  MultiGraph graph;
  int p = 1;
  int q = 1;
};

/// Capacitated k-ECSS: every cut must carry selected capacity >= k.
struct CapEcssInstance {
  MultiGraph graph;
  int k = 1;
};

class InfeasibleInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Copy of `graph` with the given per-edge capacities.
MultiGraph with_capacities(const MultiGraph& graph, std::span<const std::int64_t> capacity);

/// Largest and smallest capacity among edges with positive capacity, after
/// clamping at k. Both are 0 when no edge has positive capacity.
std::pair<std::int64_t, std::int64_t> capacity_range(const CapEcssInstance& instance);

}  // namespace fgc
