#include "fgc/primal_dual.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace fgc {

namespace {

void sort_sets(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

bool crossed_by(const MultiGraph& graph, const EdgeSet& chosen, VertexSet set) {
  return std::any_of(chosen.begin(), chosen.end(), [&](EdgeId id) { return graph.edge(id).crosses(set); });
}

}  // namespace

RequirementOracle RequirementOracle::symmetric(int n, const std::vector<CutSide>& sides) {
  std::vector<VertexSet> sets;
  sets.reserve(2 * sides.size());
  for (const auto& side : sides) {
    sets.push_back(side.members());
    sets.push_back(side.complement());
  }
  return from_sets(n, std::move(sets));
}

RequirementOracle RequirementOracle::from_sets(int n, std::vector<VertexSet> sets) {
  if (n < 1 || n > kMaxVertices) throw GraphError("vertex count out of range");
  const VertexSet full = VertexSet::full(n);
  for (VertexSet s : sets) {
    if (!s.subset_of(full)) throw GraphError("requirement set outside the vertex range");
  }
  std::erase_if(sets, [&](VertexSet s) { return s.empty() || s == full; });
  sort_sets(sets);
  RequirementOracle out;
  out.n_ = n;
  out.sets_ = std::move(sets);
  return out;
}

bool RequirementOracle::evaluate(VertexSet set) const {
  return std::binary_search(sets_.begin(), sets_.end(), set, lex_less);
}

RequirementOracle build_requirement(const CutCollection& collection, const EdgeSet& f1, const MultiGraph& graph) {
  std::vector<CutSide> kept;
  for (const auto& side : collection.cuts) {
    const auto crossing = cut_edges(graph, f1, side.members());
    const bool has_unsafe =
        std::any_of(crossing.begin(), crossing.end(), [&](EdgeId id) { return !graph.edge(id).safe(); });
    if (has_unsafe) kept.push_back(side);
  }
  return RequirementOracle::symmetric(graph.vertex_count(), kept);
}

std::vector<VertexSet> minimal_violated_sets(const RequirementOracle& oracle, const MultiGraph& graph,
                                             const EdgeSet& chosen) {
  std::vector<VertexSet> violated;
  for (VertexSet s : oracle.active_sets()) {
    if (!crossed_by(graph, chosen, s)) violated.push_back(s);
  }
  std::vector<VertexSet> minimal;
  for (VertexSet s : violated) {
    const bool has_smaller =
        std::any_of(violated.begin(), violated.end(), [&](VertexSet t) { return t != s && t.subset_of(s); });
    if (!has_smaller) minimal.push_back(s);
  }
  return minimal;
}

bool covers_requirement(const RequirementOracle& oracle, const MultiGraph& graph, const EdgeSet& chosen) {
  return std::all_of(oracle.active_sets().begin(), oracle.active_sets().end(),
                     [&](VertexSet s) { return crossed_by(graph, chosen, s); });
}

WgmvResult wgmv_solve(const MultiGraph& graph, const EdgeSet& candidates, const RequirementOracle& oracle) {
  if (oracle.vertex_count() != graph.vertex_count()) throw GraphError("oracle and graph sizes differ");
  WgmvResult result;
  EdgeSet chosen;
  std::vector<Rational> load(static_cast<std::size_t>(graph.edge_count()));

  for (;;) {
    const auto active = minimal_violated_sets(oracle, graph, chosen);
    if (active.empty()) break;
    ++result.phases;

    // Number of active sets each unchosen candidate crosses.
    std::vector<int> degree(static_cast<std::size_t>(graph.edge_count()), 0);
    for (VertexSet s : active) {
      bool crossed = false;
      for (EdgeId id : candidates) {
        if (contains(chosen, id) || !graph.edge(id).crosses(s)) continue;
        ++degree[id];
        crossed = true;
      }
      if (!crossed) throw std::runtime_error("augmentation infeasible");
    }

    std::optional<Rational> step;
    for (EdgeId id : candidates) {
      if (degree[id] == 0) continue;
      Rational slack = (graph.edge(id).cost - load[id]) / Rational(degree[id]);
      if (!step || slack < *step) step = std::move(slack);
    }
    for (VertexSet s : active) result.dual.values[s.bits()] += *step;
    result.dual.total += *step * Rational(static_cast<std::int64_t>(active.size()));
    for (EdgeId id : candidates) {
      if (degree[id] > 0) load[id] += *step * Rational(degree[id]);
    }
    // One edge per phase; other edges that went tight are picked up at
    // step 0 in the following phases if still needed.
    for (EdgeId id : candidates) {
      if (degree[id] > 0 && load[id] == graph.edge(id).cost) {
        chosen = set_union(chosen, EdgeSet{id});
        result.addition_order.push_back(id);
        break;
      }
    }
  }

  for (auto it = result.addition_order.rbegin(); it != result.addition_order.rend(); ++it) {
    EdgeSet trial = set_difference(chosen, EdgeSet{*it});
    if (covers_requirement(oracle, graph, trial)) chosen = std::move(trial);
  }
  result.augmentation = std::move(chosen);
  return result;
}

bool dual_feasible(const MultiGraph& graph, const EdgeSet& candidates, const DualState& dual) {
  for (const auto& [bits, value] : dual.values) {
    if (value.sign() < 0) return false;
  }
  for (EdgeId id : candidates) {
    const auto& e = graph.edge(id);
    Rational load;
    for (const auto& [bits, value] : dual.values) {
      if (e.crosses(VertexSet(bits))) load += value;
    }
    if (load > e.cost) return false;
  }
  return true;
}

bool is_uncrossable_bruteforce(const RequirementOracle& oracle) {
  const int n = oracle.vertex_count();
  const VertexSet full = VertexSet::full(n);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits + 1 < limit; ++bits) {
    const VertexSet s(bits);
    if (oracle.evaluate(s) != oracle.evaluate(s.complement(n))) return false;
  }
  const auto& sets = oracle.active_sets();
  for (VertexSet a : sets) {
    for (VertexSet b : sets) {
      const auto f = [&](VertexSet s) { return !s.empty() && s != full && oracle.evaluate(s); };
      if (f(a & b) && f(a | b)) continue;
      if (f(a - b) && f(b - a)) continue;
      return false;
    }
  }
  return true;
}

}  // namespace fgc
