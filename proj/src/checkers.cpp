#include "fgc/checkers.hpp"

#include <algorithm>

#include "fgc/cuts.hpp"

namespace fgc {

namespace {

void require_valid(const MultiGraph& graph, const EdgeSet& f) {
  for (EdgeId id : f) {
    if (id < 0 || id >= graph.edge_count()) throw GraphError("edge id out of range");
  }
}

// Capacity vector that is zero outside F.
template <typename Capacity>
std::vector<std::int64_t> capacities_on(const MultiGraph& graph, const EdgeSet& f, Capacity capacity) {
  require_valid(graph, f);
  std::vector<std::int64_t> out(static_cast<std::size_t>(graph.edge_count()), 0);
  for (EdgeId id : f) out[id] = capacity(graph.edge(id));
  return out;
}

}  // namespace

MultiGraph with_capacities(const MultiGraph& graph, std::span<const std::int64_t> capacity) {
  if (capacity.size() != static_cast<std::size_t>(graph.edge_count())) {
    throw GraphError("capacity vector size does not match edge count");
  }
  std::vector<EdgeSpec> specs;
  specs.reserve(capacity.size());
  for (const auto& e : graph.edges()) specs.push_back({e.u, e.v, e.cost, e.label, capacity[e.id]});
  return build_graph(graph.vertex_count(), specs);
}

std::pair<std::int64_t, std::int64_t> capacity_range(const CapEcssInstance& instance) {
  std::int64_t high = 0;
  std::int64_t low = 0;
  for (const auto& e : instance.graph.edges()) {
    if (e.capacity <= 0) continue;
    const std::int64_t u = std::min<std::int64_t>(e.capacity, instance.k);
    high = std::max(high, u);
    low = low == 0 ? u : std::min(low, u);
  }
  return {high, low};
}

bool is_k_edge_connected(const MultiGraph& graph, const EdgeSet& f, int k) {
  if (graph.vertex_count() == 1) return true;
  const auto cap = capacities_on(graph, f, [](const EdgeRecord&) { return std::int64_t{1}; });
  return min_cut_value(graph, cap) >= k;
}

bool check_1k(const FgcInstance& instance, const EdgeSet& f) {
  if (instance.p != 1) throw GraphError("check_1k needs p = 1");
  const std::int64_t k = instance.q;
  if (instance.graph.vertex_count() == 1) return true;
  const auto cap = capacities_on(instance.graph, f, [&](const EdgeRecord& e) { return e.safe() ? k + 1 : 1; });
  return min_cut_value(instance.graph, cap) >= k + 1;
}

bool check_k1(const FgcInstance& instance, const EdgeSet& f) {
  if (instance.q != 1) throw GraphError("check_k1 needs q = 1");
  const std::int64_t k = instance.p;
  if (instance.graph.vertex_count() == 1) return true;
  const auto cap = capacities_on(instance.graph, f, [&](const EdgeRecord& e) { return e.safe() ? k + 1 : k; });
  return min_cut_value(instance.graph, cap) >= k * (k + 1);
}

bool check_pq(const FgcInstance& instance, const EdgeSet& f) {
  const std::int64_t p = instance.p;
  const std::int64_t q = instance.q;
  if (p < 1 || q < 0) throw GraphError("need p >= 1 and q >= 0");
  const MultiGraph& graph = instance.graph;
  if (graph.vertex_count() == 1) return true;
  const auto cap = capacities_on(graph, f, [&](const EdgeRecord& e) { return e.safe() ? p + q : p; });
  const std::int64_t mu = min_cut_value(graph, cap);
  if (mu < p * (p + q)) return false;

  EdgeWeights weight(cap.begin(), cap.end());
  const auto cuts = enumerate_cuts_up_to(graph, weight, Rational(2 * mu));
  return std::all_of(cuts.begin(), cuts.end(), [&](const CutSide& side) {
    std::int64_t safe = 0;
    std::int64_t total = 0;
    for (EdgeId id : cut_edges(graph, f, side.members())) {
      ++total;
      if (graph.edge(id).safe()) ++safe;
    }
    return safe >= p || total >= p + q;
  });
}

bool check_fgc(const FgcInstance& instance, const EdgeSet& f) {
  if (instance.q == 0) return is_k_edge_connected(instance.graph, f, instance.p);
  if (instance.p == 1) return check_1k(instance, f);
  if (instance.q == 1) return check_k1(instance, f);
  return check_pq(instance, f);
}

bool check_cap_kecss(const CapEcssInstance& instance, const EdgeSet& f) {
  if (instance.k < 1) throw GraphError("k must be positive");
  if (instance.graph.vertex_count() == 1) return true;
  const std::int64_t k = instance.k;
  const auto cap = capacities_on(instance.graph, f, [&](const EdgeRecord& e) { return std::min(e.capacity, k); });
  return min_cut_value(instance.graph, cap) >= k;
}

}  // namespace fgc
