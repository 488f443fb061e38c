#include "fgc/solvers.hpp"

#include <algorithm>
#include <numeric>

#include "fgc/arborescence.hpp"
#include "fgc/checkers.hpp"
#include "fgc/joins.hpp"

namespace fgc {

namespace {

std::vector<std::int64_t> unit_vector(const MultiGraph& graph) {
  return std::vector<std::int64_t>(static_cast<std::size_t>(graph.edge_count()), 1);
}

MultiGraph with_unit_costs(const MultiGraph& graph) {
  std::vector<EdgeSpec> specs;
  for (const auto& e : graph.edges()) specs.push_back({e.u, e.v, Rational(1), e.label, 1});
  return build_graph(graph.vertex_count(), specs);
}

SolveReport single_vertex_report() {
  SolveReport report;
  report.guarantee = Rational(1);
  report.lower_bound = Rational(0);
  report.stage_costs = {Rational(0)};
  return report;
}

// Min-cost rooted k-arborescence on the bidirected multigraph, projected back.
std::pair<EdgeSet, Rational> arborescence_cover(const MultiGraph& graph, std::span<const std::int64_t> multiplicity,
                                                int k) {
  const Digraph digraph = bidirect(graph, multiplicity);
  const KArborescence tree = min_cost_k_arborescence(digraph, 0, k);
  return {project_arcs_to_edges(tree, digraph), tree.cost};
}

void require_unit_costs(const MultiGraph& graph) {
  for (const auto& e : graph.edges()) {
    if (e.cost != Rational(1)) throw GraphError("unweighted solver needs unit costs");
  }
}

// (1,1)-feasibility of a multiset given by per-edge multiplicities.
bool multiset_feasible(const MultiGraph& graph, const std::vector<std::int64_t>& multiplicity) {
  std::vector<std::int64_t> cap(multiplicity.size());
  for (const auto& e : graph.edges()) cap[e.id] = multiplicity[e.id] * (e.safe() ? 2 : 1);
  return min_cut_value(graph, cap) >= 2;
}

EdgeSet support(const std::vector<std::int64_t>& multiplicity) {
  EdgeSet out;
  for (std::size_t i = 0; i < multiplicity.size(); ++i) {
    if (multiplicity[i] > 0) out.push_back(static_cast<EdgeId>(i));
  }
  return out;
}

using StageOne = std::function<std::pair<EdgeSet, std::optional<Rational>>()>;

SolveReport k1_pipeline(const FgcInstance& instance, const StageOne& stage1, Rational guarantee) {
  const MultiGraph& graph = instance.graph;
  const int k = instance.p;
  if (instance.q != 1) throw GraphError("(k,1) solver needs q = 1");
  if (graph.vertex_count() == 1) return single_vertex_report();
  if (!check_k1(instance, all_edges(graph))) throw InfeasibleInstance("instance infeasible");

  auto [f1, stage1_bound] = stage1();
  if (!is_k_edge_connected(graph, f1, k)) throw std::logic_error("stage 1 is not k-edge-connected");

  K1Trace trace;
  trace.stage1 = f1;
  trace.tight_cuts = k_edge_cut_collection(graph, f1, k);
  trace.requirement = build_requirement(trace.tight_cuts, f1, graph);
  trace.candidates = set_difference(all_edges(graph), f1);
  trace.augmentation = wgmv_solve(graph, trace.candidates, trace.requirement);

  SolveReport report;
  report.solution = set_union(f1, trace.augmentation.augmentation);
  report.cost = total_cost(graph, report.solution);
  report.guarantee = std::move(guarantee);
  report.iterations = trace.augmentation.phases;
  report.stage_costs = {total_cost(graph, f1), total_cost(graph, trace.augmentation.augmentation)};
  Rational bound = trace.augmentation.dual.total;
  if (stage1_bound && *stage1_bound > bound) bound = *stage1_bound;
  report.lower_bound = bound;
  report.k1 = std::move(trace);
  if (!check_k1(instance, report.solution)) throw std::logic_error("(k,1) output failed its checker");
  return report;
}

}  // namespace

SolveReport solve_cap_kecss(const CapEcssInstance& instance) {
  const MultiGraph& graph = instance.graph;
  const int k = instance.k;
  if (k < 1) throw GraphError("k must be positive");
  if (graph.vertex_count() == 1) return single_vertex_report();
  if (!check_cap_kecss(instance, all_edges(graph))) throw InfeasibleInstance("instance infeasible");

  std::vector<std::int64_t> multiplicity(static_cast<std::size_t>(graph.edge_count()));
  for (const auto& e : graph.edges()) multiplicity[e.id] = std::clamp<std::int64_t>(e.capacity, 0, k);
  auto [edges, tree_cost] = arborescence_cover(graph, multiplicity, k);

  SolveReport report;
  report.solution = std::move(edges);
  report.cost = total_cost(graph, report.solution);
  const std::int64_t u_max = capacity_range(instance).first;
  report.guarantee = Rational(std::min<std::int64_t>(k, 2 * u_max));
  report.lower_bound = tree_cost / Rational(k);
  report.iterations = 1;
  report.stage_costs = {report.cost};
  if (!check_cap_kecss(instance, report.solution)) throw std::logic_error("Cap-k-ECSS output failed its checker");
  return report;
}

SolveReport solve_1k(const FgcInstance& instance, const SolverConfig&) {
  const MultiGraph& graph = instance.graph;
  if (instance.p != 1) throw GraphError("(1,k) solver needs p = 1");
  const int k = instance.q;
  if (k < 1) throw GraphError("(1,k) solver needs q >= 1");
  if (graph.vertex_count() == 1) return single_vertex_report();
  if (!check_1k(instance, all_edges(graph))) throw InfeasibleInstance("instance infeasible");

  std::vector<std::int64_t> multiplicity(static_cast<std::size_t>(graph.edge_count()));
  for (const auto& e : graph.edges()) multiplicity[e.id] = e.safe() ? k + 1 : 1;
  auto [edges, tree_cost] = arborescence_cover(graph, multiplicity, k + 1);

  SolveReport report;
  report.solution = std::move(edges);
  report.cost = total_cost(graph, report.solution);
  report.guarantee = Rational(k + 1);
  report.lower_bound = tree_cost / Rational(k + 1);
  report.iterations = 1;
  report.stage_costs = {report.cost};
  if (!check_1k(instance, report.solution)) throw std::logic_error("(1,k) output failed its checker");
  return report;
}

SolveReport solve_k1(const FgcInstance& instance, const SolverConfig&) {
  const auto stage1 = [&]() -> std::pair<EdgeSet, std::optional<Rational>> {
    const CapEcssInstance ecss{with_capacities(instance.graph, unit_vector(instance.graph)), instance.p};
    SolveReport r = solve_cap_kecss(ecss);
    return {std::move(r.solution), r.lower_bound};
  };
  return k1_pipeline(instance, stage1, Rational(4));
}

SolveReport solve_unweighted_k1(const FgcInstance& instance, const SolverConfig& config) {
  require_unit_costs(instance.graph);
  const auto stage1 = [&]() -> std::pair<EdgeSet, std::optional<Rational>> {
    if (config.k_ecss) return {make_edge_set(config.k_ecss(instance.graph, instance.p)), std::nullopt};
    const CapEcssInstance ecss{with_capacities(instance.graph, unit_vector(instance.graph)), instance.p};
    SolveReport r = solve_cap_kecss(ecss);
    return {std::move(r.solution), r.lower_bound};
  };
  return k1_pipeline(instance, stage1, Rational(2) + config.k_ecss_factor);
}

SolveReport solve_pq(const FgcInstance& instance, const SolverConfig& config) {
  const MultiGraph& graph = instance.graph;
  const std::int64_t p = instance.p;
  const std::int64_t q = instance.q;
  if (p < 1 || q < 0) throw GraphError("need p >= 1 and q >= 0");
  if (q == 0) {
    if (!is_k_edge_connected(graph, all_edges(graph), instance.p)) throw InfeasibleInstance("instance infeasible");
    return solve_cap_kecss(CapEcssInstance{with_capacities(graph, unit_vector(graph)), instance.p});
  }
  if (q == 1) return solve_k1(instance, config);
  if (graph.vertex_count() == 1) return single_vertex_report();
  if (!check_pq(instance, all_edges(graph))) throw InfeasibleInstance("instance infeasible");

  // Stage 1: p > q needs plain p-edge-connectivity; otherwise capacities
  // p+q (safe) / p (unsafe) against k = p(p+q).
  std::vector<std::int64_t> capacity(static_cast<std::size_t>(graph.edge_count()), 1);
  std::int64_t k = p;
  if (p <= q) {
    k = p * (p + q);
    for (const auto& e : graph.edges()) capacity[e.id] = e.safe() ? p + q : p;
  }
  SolveReport stage1 = solve_cap_kecss(CapEcssInstance{with_capacities(graph, capacity), static_cast<int>(k)});

  SolveReport report;
  EdgeSet f = stage1.solution;
  report.guarantee = stage1.guarantee;
  report.lower_bound = stage1.lower_bound;
  report.stage_costs = {stage1.cost};

  for (;;) {
    EdgeWeights weight(static_cast<std::size_t>(graph.edge_count()), Rational(0));
    for (EdgeId id : f) weight[id] = Rational(capacity[id]);
    std::vector<CutSide> deficient;
    for (const auto& side : enumerate_cuts_up_to(graph, weight, Rational(2 * k))) {
      std::int64_t safe = 0;
      std::int64_t total = 0;
      for (EdgeId id : cut_edges(graph, f, side.members())) {
        ++total;
        if (graph.edge(id).safe()) ++safe;
      }
      if (total < p + q && safe < p) deficient.push_back(side);
    }
    if (deficient.empty()) break;
    if (report.iterations >= graph.edge_count()) throw std::logic_error("augmentation loop does not terminate");

    HittingSetRound round;
    round.deficient = std::move(deficient);
    round.element_edges = set_difference(all_edges(graph), f);
    for (EdgeId id : round.element_edges) round.problem.cost.push_back(graph.edge(id).cost);
    for (const auto& side : round.deficient) {
      std::vector<int> members;
      for (int x = 0; x < static_cast<int>(round.element_edges.size()); ++x) {
        if (graph.edge(round.element_edges[x]).crosses(side.members())) members.push_back(x);
      }
      if (members.empty()) throw InfeasibleInstance("instance infeasible");
      round.problem.sets.push_back(std::move(members));
    }
    round.chosen = greedy_hitting_set(round.problem);
    round.cost = hitting_set_cost(round.problem, round.chosen);
    EdgeSet added;
    for (int x : round.chosen) added.push_back(round.element_edges[x]);
    f = set_union(f, make_edge_set(std::move(added)));
    report.guarantee += harmonic(static_cast<std::int64_t>(round.deficient.size()));
    report.stage_costs.push_back(round.cost);
    report.rounds.push_back(std::move(round));
    ++report.iterations;
  }

  report.solution = std::move(f);
  report.cost = total_cost(graph, report.solution);
  if (!check_pq(instance, report.solution)) throw std::logic_error("(p,q) output failed its checker");
  return report;
}

EdgeSet two_ecss_unweighted(const MultiGraph& graph) {
  const MultiGraph unit = with_unit_costs(graph);
  if (graph.vertex_count() > 1 && !is_k_edge_connected(unit, all_edges(unit), 2)) {
    throw GraphError("graph is not 2-edge-connected");
  }
  return solve_cap_kecss(CapEcssInstance{unit, 2}).solution;
}

SolveReport solve_unweighted_fgc(const FgcInstance& instance, const SolverConfig& config) {
  const MultiGraph& graph = instance.graph;
  if (instance.p != 1 || instance.q != 1) throw GraphError("unweighted FGC solver needs p = q = 1");
  require_unit_costs(graph);
  if (graph.vertex_count() == 1) return single_vertex_report();
  if (!check_1k(instance, all_edges(graph))) throw InfeasibleInstance("instance infeasible: unsafe bridge");

  UnweightedFgcTrace trace;
  trace.tree = safe_max_spanning_tree(graph);

  // Join-based candidate.
  std::vector<std::int64_t> multiplicity(static_cast<std::size_t>(graph.edge_count()), 0);
  for (EdgeId id : trace.tree) multiplicity[id] = 1;
  EdgeSet safe_tree;
  for (EdgeId id : trace.tree) {
    if (graph.edge(id).safe()) safe_tree.push_back(id);
  }
  if (safe_tree.size() < trace.tree.size()) {
    const Contraction reduced = contract(graph, safe_tree);
    std::vector<EdgeId> reduced_tree;
    for (EdgeId j = 0; j < reduced.graph.edge_count(); ++j) {
      if (contains(trace.tree, reduced.original_edge[j])) reduced_tree.push_back(j);
    }
    const VertexSet odd = odd_degree_set(reduced.graph, reduced_tree);
    std::vector<EdgeId> join;
    for (EdgeId j : min_cardinality_wjoin(reduced.graph, odd)) join.push_back(reduced.original_edge[j]);
    trace.join = make_edge_set(std::move(join));
    for (EdgeId id : trace.join) ++multiplicity[id];

    for (EdgeId id = 0; id < graph.edge_count(); ++id) {
      if (multiplicity[id] < 2) continue;
      multiplicity[id] = 1;
      for (int guard = 0; !multiset_feasible(graph, multiplicity); ++guard) {
        if (guard > graph.edge_count()) throw std::logic_error("de-duplication repair failed");
        const auto& e = graph.edge(id);
        const EdgeSet rest = set_difference(support(multiplicity), EdgeSet{id});
        VertexSet side;
        for (VertexSet c : components(graph, rest)) {
          if (c.contains(e.u)) side = c;
        }
        if (side.contains(e.v)) throw std::logic_error("de-duplication left a violated cut without a bridge");
        const EdgeSet present = support(multiplicity);
        EdgeId replacement = -1;
        for (EdgeId c : cut_edges(graph, side)) {
          if (!contains(present, c)) {
            replacement = c;
            break;
          }
        }
        if (replacement < 0) throw InfeasibleInstance("instance infeasible: unsafe bridge");
        multiplicity[replacement] = 1;
        trace.repairs.push_back(replacement);
      }
    }
  }
  trace.join_candidate = support(multiplicity);

  // 2-ECSS-based candidate on the graph with every safe edge doubled.
  std::vector<EdgeSpec> doubled;
  std::vector<EdgeId> origin;
  for (const auto& e : graph.edges()) {
    doubled.push_back({e.u, e.v, Rational(1), e.label, 1});
    origin.push_back(e.id);
  }
  for (const auto& e : graph.edges()) {
    if (!e.safe()) continue;
    doubled.push_back({e.u, e.v, Rational(1), e.label, 1});
    origin.push_back(e.id);
  }
  const MultiGraph g2 = build_graph(graph.vertex_count(), doubled);
  const EdgeSet ecss = config.two_ecss ? make_edge_set(config.two_ecss(g2)) : two_ecss_unweighted(g2);
  std::vector<EdgeId> mapped;
  for (EdgeId id : ecss) mapped.push_back(origin.at(static_cast<std::size_t>(id)));
  trace.ecss_candidate = make_edge_set(std::move(mapped));

  if (!check_1k(instance, trace.join_candidate)) throw std::logic_error("join candidate failed its checker");
  if (!check_1k(instance, trace.ecss_candidate)) throw std::logic_error("2-ECSS candidate failed its checker");

  SolveReport report;
  report.solution =
      trace.ecss_candidate.size() < trace.join_candidate.size() ? trace.ecss_candidate : trace.join_candidate;
  report.cost = total_cost(graph, report.solution);
  const Rational alpha = config.two_ecss_factor;
  report.guarantee = Rational(4) * alpha / (Rational(2) * alpha + Rational(1));
  report.iterations = 1;
  report.stage_costs = {Rational(static_cast<std::int64_t>(trace.join_candidate.size())),
                        Rational(static_cast<std::int64_t>(trace.ecss_candidate.size()))};
  report.unweighted = std::move(trace);
  return report;
}

EdgeSet forest_first_baseline(const FgcInstance& instance) {
  const MultiGraph& graph = instance.graph;
  if (instance.p != 1) throw GraphError("baseline needs p = 1");
  if (!check_1k(instance, all_edges(graph))) throw InfeasibleInstance("instance infeasible");

  std::vector<int> parent(static_cast<std::size_t>(graph.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  EdgeSet chosen;
  for (const auto& e : graph.edges()) {
    if (!e.safe()) continue;
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) continue;
    parent[std::max(a, b)] = std::min(a, b);
    chosen.push_back(e.id);
  }

  std::vector<EdgeId> order;
  for (const auto& e : graph.edges()) {
    if (!contains(chosen, e.id)) order.push_back(e.id);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return graph.edge(a).cost < graph.edge(b).cost; });
  std::vector<EdgeId> added;
  for (EdgeId id : order) {
    if (graph.vertex_count() == 1 || check_1k(instance, chosen)) break;
    chosen = set_union(chosen, EdgeSet{id});
    added.push_back(id);
  }
  for (auto it = added.rbegin(); it != added.rend(); ++it) {
    EdgeSet trial = set_difference(chosen, EdgeSet{*it});
    if (check_1k(instance, trial)) chosen = std::move(trial);
  }
  return chosen;
}

}  // namespace fgc
