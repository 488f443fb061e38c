#pragma once

#include "fgc/instance.hpp"

namespace fgc {

/// (1,k)-FGC with k = instance.q: every cut of F has a safe edge or k+1
/// unsafe edges. Tested as a min cut with capacities k+1 (safe) / 1 (unsafe).
bool check_1k(const FgcInstance& instance, const EdgeSet& f);

/// (k,1)-FGC with k = instance.p: every cut of F has k safe edges or k+1
/// edges. Min cut with capacities k+1 (safe) / k (unsafe) against k(k+1).
bool check_k1(const FgcInstance& instance, const EdgeSet& f);

/// General (p,q)-FGC: min cut mu under capacities p+q (safe) / p (unsafe),
/// then every cut of capacity <= 2 mu is inspected directly.
bool check_pq(const FgcInstance& instance, const EdgeSet& f);

/// Dispatches on (p, q): q = 0 is plain p-edge-connectivity.
bool check_fgc(const FgcInstance& instance, const EdgeSet& f);

/// Every cut of F carries capacity >= k (capacities clamped at k).
bool check_cap_kecss(const CapEcssInstance& instance, const EdgeSet& f);

/// λ(V, F) >= k with unit edge weights.
bool is_k_edge_connected(const MultiGraph& graph, const EdgeSet& f, int k);

}  // namespace fgc
