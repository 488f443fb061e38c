#include "fgc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include <omp.h>

namespace fgc {

namespace {

constexpr int kMaxCutTableVertices = 16;

std::uint64_t to_mask(const MultiGraph& graph, const EdgeSet& f) {
  if (graph.edge_count() > 64) throw GraphError("oracle supports at most 64 edges");
  std::uint64_t mask = 0;
  for (EdgeId id : f) {
    if (id < 0 || id >= graph.edge_count()) throw GraphError("edge id out of range");
    mask |= std::uint64_t{1} << id;
  }
  return mask;
}

EdgeSet from_mask(std::uint64_t mask) {
  EdgeSet out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

// Edge masks of delta(S) for every bipartition, or empty for large n.
std::vector<std::uint64_t> cut_table(const MultiGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<std::uint64_t> table;
  if (n < 2 || n > kMaxCutTableVertices) return table;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  table.reserve(limit - 1);
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const VertexSet side(bits << 1);
    std::uint64_t mask = 0;
    for (const auto& e : graph.edges()) {
      if (e.crosses(side)) mask |= std::uint64_t{1} << e.id;
    }
    table.push_back(mask);
  }
  return table;
}

class FgcPredicate {
 public:
  explicit FgcPredicate(const FgcInstance& instance)
      : graph_(instance.graph), p_(instance.p), q_(instance.q), cuts_(cut_table(instance.graph)) {
    if (p_ < 1 || q_ < 0) throw GraphError("need p >= 1 and q >= 0");
    for (const auto& e : graph_.edges()) {
      if (!e.safe()) unsafe_ |= std::uint64_t{1} << e.id;
    }
  }

  bool operator()(std::uint64_t mask) const {
    if (graph_.vertex_count() == 1) return true;
    // Deleting more edges never helps connectivity, so only failure sets of
    // the largest allowed size need checking.
    std::vector<int> unsafe;
    for (std::uint64_t u = mask & unsafe_; u != 0; u &= u - 1) unsafe.push_back(std::countr_zero(u));
    const int r = std::min<int>(q_, static_cast<int>(unsafe.size()));
    return every_removal(mask, unsafe, 0, r);
  }

 private:
  bool every_removal(std::uint64_t mask, const std::vector<int>& unsafe, std::size_t from, int left) const {
    if (left == 0) return p_connected(mask);
    for (std::size_t i = from; i + static_cast<std::size_t>(left) <= unsafe.size(); ++i) {
      if (!every_removal(mask & ~(std::uint64_t{1} << unsafe[i]), unsafe, i + 1, left - 1)) return false;
    }
    return true;
  }

  bool p_connected(std::uint64_t mask) const {
    if (!cuts_.empty()) {
      return std::all_of(cuts_.begin(), cuts_.end(),
                         [&](std::uint64_t cut) { return std::popcount(cut & mask) >= p_; });
    }
    std::vector<std::int64_t> cap(static_cast<std::size_t>(graph_.edge_count()), 0);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) cap[std::countr_zero(m)] = 1;
    return min_cut_value(graph_, cap) >= p_;
  }

  const MultiGraph& graph_;
  int p_;
  int q_;
  std::uint64_t unsafe_ = 0;
  std::vector<std::uint64_t> cuts_;
};

class CapPredicate {
 public:
  explicit CapPredicate(const CapEcssInstance& instance)
      : graph_(instance.graph), k_(instance.k), cuts_(cut_table(instance.graph)) {
    if (k_ < 1) throw GraphError("k must be positive");
    for (const auto& e : graph_.edges()) capacity_.push_back(std::clamp<std::int64_t>(e.capacity, 0, k_));
  }

  bool operator()(std::uint64_t mask) const {
    if (graph_.vertex_count() == 1) return true;
    if (!cuts_.empty()) {
      return std::all_of(cuts_.begin(), cuts_.end(), [&](std::uint64_t cut) {
        std::int64_t total = 0;
        for (std::uint64_t m = cut & mask; m != 0 && total < k_; m &= m - 1) total += capacity_[std::countr_zero(m)];
        return total >= k_;
      });
    }
    std::vector<std::int64_t> cap(capacity_.size(), 0);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) cap[std::countr_zero(m)] = capacity_[std::countr_zero(m)];
    return min_cut_value(graph_, cap) >= k_;
  }

 private:
  const MultiGraph& graph_;
  std::int64_t k_;
  std::vector<std::uint64_t> cuts_;
  std::vector<std::int64_t> capacity_;
};

struct Incumbent {
  std::optional<Rational> cost;
  std::uint64_t mask = 0;

  bool improves(const Rational& c, std::uint64_t m) const {
    if (!cost) return true;
    if (c != *cost) return c < *cost;
    return m < mask;
  }
  void offer(const Rational& c, std::uint64_t m) {
    if (improves(c, m)) {
      cost = c;
      mask = m;
    }
  }
};

using Predicate = std::function<bool(std::uint64_t)>;

// Include-first DFS. Prunes on cost strictly above the incumbent (equal cost
// may still give a smaller mask), on the full remainder being infeasible,
// and stops descending as soon as the included set is feasible.
class SubsetSearch {
 public:
  SubsetSearch(const Predicate& feasible, const std::vector<Rational>& cost, Incumbent start)
      : feasible_(feasible), cost_(cost), best_(std::move(start)) {}

  void run(int index, std::uint64_t included, const Rational& spent) {
    ++explored_;
    if (best_.cost && spent > *best_.cost) return;
    if (feasible_(included)) {
      best_.offer(spent, included);
      return;
    }
    const int m = static_cast<int>(cost_.size());
    if (index == m) return;
    const std::uint64_t rest = (m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1) &
                               ~((std::uint64_t{1} << index) - 1);
    if (!feasible_(included | rest)) return;
    run(index + 1, included | (std::uint64_t{1} << index), spent + cost_[index]);
    run(index + 1, included, spent);
  }

  [[nodiscard]] const Incumbent& best() const { return best_; }
  [[nodiscard]] std::int64_t explored() const { return explored_; }

 private:
  const Predicate& feasible_;
  const std::vector<Rational>& cost_;
  Incumbent best_;
  std::int64_t explored_ = 0;
};

OracleResult finish(const Incumbent& best, std::int64_t explored) {
  OracleResult out;
  out.optimum = best.cost;
  if (best.cost) out.witness = from_mask(best.mask);
  out.explored = explored;
  return out;
}

std::vector<Rational> edge_costs(const MultiGraph& graph) {
  if (graph.edge_count() > kMaxOracleEdges) throw GraphError("too many edges for the exact oracle");
  std::vector<Rational> cost;
  for (const auto& e : graph.edges()) cost.push_back(e.cost);
  return cost;
}

OracleResult search_serial(const Predicate& feasible, const std::vector<Rational>& cost) {
  SubsetSearch search(feasible, cost, Incumbent{});
  search.run(0, 0, Rational(0));
  return finish(search.best(), search.explored());
}

// Tasks fix the decisions on the first `depth` edges. A task whose prefix
// already contains a feasible set repeats work the serial search would skip,
// but only finds supersets, which never beat the (cost, mask) minimum.
OracleResult search_parallel(const Predicate& feasible, const std::vector<Rational>& cost) {
  const int m = static_cast<int>(cost.size());
  const int depth = std::min(m, 8);
  const std::int64_t tasks = std::int64_t{1} << depth;
  Incumbent shared;
  std::int64_t explored = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : explored)
  for (std::int64_t t = 0; t < tasks; ++t) {
    // Visit include-heavy prefixes first, matching the serial order.
    const std::uint64_t prefix = static_cast<std::uint64_t>(tasks - 1 - t);
    Rational spent;
    for (int i = 0; i < depth; ++i) {
      if ((prefix >> i) & 1U) spent += cost[i];
    }
    Incumbent start;
#pragma omp critical(fgc_oracle_incumbent)
    start = shared;
    SubsetSearch search(feasible, cost, start);
    search.run(depth, prefix, spent);
    explored += search.explored();
#pragma omp critical(fgc_oracle_incumbent)
    {
      if (search.best().cost) shared.offer(*search.best().cost, search.best().mask);
    }
  }
  return finish(shared, explored);
}

struct HittingTable {
  std::vector<std::uint32_t> sets;
  int elements = 0;
};

HittingTable hitting_table(const HittingSetProblem& problem) {
  HittingTable table;
  table.elements = static_cast<int>(problem.cost.size());
  if (table.elements > kMaxOracleElements) throw std::invalid_argument("too many elements for the exact oracle");
  for (const auto& set : problem.sets) {
    std::uint32_t mask = 0;
    for (int x : set) {
      if (x < 0 || x >= table.elements) throw std::out_of_range("hitting set element out of range");
      mask |= std::uint32_t{1} << x;
    }
    table.sets.push_back(mask);
  }
  return table;
}

bool hits_all(const HittingTable& table, std::uint32_t chosen) {
  return std::all_of(table.sets.begin(), table.sets.end(), [&](std::uint32_t s) { return (s & chosen) != 0; });
}

Rational mask_cost(const HittingSetProblem& problem, std::uint32_t chosen) {
  Rational total;
  for (; chosen != 0; chosen &= chosen - 1) total += problem.cost[std::countr_zero(chosen)];
  return total;
}

OracleResult hitting_result(const Incumbent& best, std::int64_t explored) {
  OracleResult out;
  out.optimum = best.cost;
  if (best.cost) {
    for (std::uint64_t m = best.mask; m != 0; m &= m - 1) out.witness.push_back(std::countr_zero(m));
  }
  out.explored = explored;
  return out;
}

}  // namespace

bool brute_force_feasible(const FgcInstance& instance, const EdgeSet& f) {
  return FgcPredicate(instance)(to_mask(instance.graph, f));
}

OracleResult brute_force_opt(const FgcInstance& instance) {
  const auto cost = edge_costs(instance.graph);
  const FgcPredicate predicate(instance);
  return search_parallel(Predicate(std::cref(predicate)), cost);
}

OracleResult brute_force_opt_serial(const FgcInstance& instance) {
  const auto cost = edge_costs(instance.graph);
  const FgcPredicate predicate(instance);
  return search_serial(Predicate(std::cref(predicate)), cost);
}

OracleResult brute_force_opt(const CapEcssInstance& instance) {
  const auto cost = edge_costs(instance.graph);
  const CapPredicate predicate(instance);
  return search_parallel(Predicate(std::cref(predicate)), cost);
}

OracleResult brute_force_opt_serial(const CapEcssInstance& instance) {
  const auto cost = edge_costs(instance.graph);
  const CapPredicate predicate(instance);
  return search_serial(Predicate(std::cref(predicate)), cost);
}

OracleResult brute_force_min_hitting_set_serial(const HittingSetProblem& problem) {
  const HittingTable table = hitting_table(problem);
  const std::uint64_t limit = std::uint64_t{1} << table.elements;
  Incumbent best;
  for (std::uint64_t chosen = 0; chosen < limit; ++chosen) {
    if (!hits_all(table, static_cast<std::uint32_t>(chosen))) continue;
    best.offer(mask_cost(problem, static_cast<std::uint32_t>(chosen)), chosen);
  }
  return hitting_result(best, static_cast<std::int64_t>(limit));
}

OracleResult brute_force_min_hitting_set(const HittingSetProblem& problem) {
  const HittingTable table = hitting_table(problem);
  const std::int64_t limit = std::int64_t{1} << table.elements;
  Incumbent shared;
#pragma omp parallel
  {
    Incumbent local;
#pragma omp for schedule(static)
    for (std::int64_t chosen = 0; chosen < limit; ++chosen) {
      const auto mask = static_cast<std::uint32_t>(chosen);
      if (!hits_all(table, mask)) continue;
      local.offer(mask_cost(problem, mask), mask);
    }
#pragma omp critical(fgc_hitting_incumbent)
    {
      if (local.cost) shared.offer(*local.cost, local.mask);
    }
  }
  return hitting_result(shared, limit);
}

}  // namespace fgc
