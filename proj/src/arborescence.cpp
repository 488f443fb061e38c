#include "fgc/arborescence.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "bounded_simplex.hpp"
#include "fgc/detail/dense_flow.hpp"

namespace fgc {

namespace {

template <typename W>
bool rooted_connected(const detail::DenseMatrix<W>& capacity, Vertex root, const W& k) {
  const int n = capacity.size();
  for (Vertex v = 0; v < n; ++v) {
    if (v == root) continue;
    const auto flow = detail::max_flow(capacity, std::uint64_t{1} << root, std::uint64_t{1} << v, std::optional<W>(k));
    if (flow.value < k) return false;
  }
  return true;
}

detail::DenseMatrix<std::int64_t> arc_count_matrix(const Digraph& digraph, std::span<const ArcId> arcs) {
  detail::DenseMatrix<std::int64_t> capacity(digraph.vertex_count);
  for (ArcId id : arcs) {
    const Arc& a = digraph.arcs.at(static_cast<std::size_t>(id));
    capacity(a.tail, a.head) += 1;
  }
  return capacity;
}

void validate_digraph(const Digraph& digraph, Vertex root, int k) {
  if (digraph.vertex_count < 1 || digraph.vertex_count > kMaxVertices) {
    throw ArborescenceError("digraph vertex count out of range");
  }
  if (root < 0 || root >= digraph.vertex_count) throw ArborescenceError("root out of range");
  if (k < 1) throw ArborescenceError("k must be positive");
  for (const Arc& a : digraph.arcs) {
    if (a.tail < 0 || a.tail >= digraph.vertex_count || a.head < 0 || a.head >= digraph.vertex_count) {
      throw ArborescenceError("arc endpoint out of range");
    }
    if (a.tail == a.head) throw ArborescenceError("self-loop arc");
    if (a.cost.sign() < 0) throw ArborescenceError("negative arc cost");
  }
}

// ---------------------------------------------------------------------------
// Classical contraction algorithm (k = 1).

struct LevelArc {
  int tail;
  int head;
  Rational cost;
  int parent;  // index in the previous level's list
};

std::optional<std::vector<int>> contraction_solve(int n, const std::vector<LevelArc>& arcs, int root) {
  std::vector<int> best(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    const auto& a = arcs[i];
    if (a.tail == a.head || a.head == root) continue;
    if (best[a.head] < 0 || a.cost < arcs[best[a.head]].cost) best[a.head] = i;
  }
  for (int v = 0; v < n; ++v) {
    if (v != root && best[v] < 0) return std::nullopt;
  }

  std::vector<int> cycle_of(static_cast<std::size_t>(n), -1);
  std::vector<int> visit_mark(static_cast<std::size_t>(n), -1);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    int v = start;
    while (v != root && visit_mark[v] < 0 && cycle_of[v] < 0) {
      visit_mark[v] = start;
      v = arcs[best[v]].tail;
    }
    if (v != root && visit_mark[v] == start && cycle_of[v] < 0) {
      for (int w = v; cycle_of[w] < 0; w = arcs[best[w]].tail) cycle_of[w] = cycles;
      ++cycles;
    }
  }

  std::vector<int> chosen;
  if (cycles == 0) {
    for (int v = 0; v < n; ++v) {
      if (v != root) chosen.push_back(best[v]);
    }
    return chosen;
  }

  std::vector<int> component(static_cast<std::size_t>(n), -1);
  int next = cycles;
  for (int v = 0; v < n; ++v) component[v] = cycle_of[v] >= 0 ? cycle_of[v] : next++;

  std::vector<LevelArc> reduced;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    const auto& a = arcs[i];
    const int cu = component[a.tail];
    const int cv = component[a.head];
    if (cu == cv || a.head == root) continue;
    Rational cost = a.cost;
    if (cycle_of[a.head] >= 0) cost -= arcs[best[a.head]].cost;
    reduced.push_back({cu, cv, std::move(cost), i});
  }
  const auto inner = contraction_solve(next, reduced, component[root]);
  if (!inner) return std::nullopt;

  std::vector<int> entry(static_cast<std::size_t>(cycles), -1);
  for (int j : *inner) {
    const int i = reduced[j].parent;
    chosen.push_back(i);
    const int head = arcs[i].head;
    if (cycle_of[head] >= 0) entry[cycle_of[head]] = head;
  }
  for (int v = 0; v < n; ++v) {
    if (cycle_of[v] >= 0 && entry[cycle_of[v]] != v) chosen.push_back(best[v]);
  }
  return chosen;
}

KArborescence solve_by_contraction(const Digraph& digraph, Vertex root) {
  std::vector<LevelArc> arcs;
  arcs.reserve(digraph.arcs.size());
  for (int i = 0; i < static_cast<int>(digraph.arcs.size()); ++i) {
    const Arc& a = digraph.arcs[i];
    arcs.push_back({a.tail, a.head, a.cost, i});
  }
  const auto chosen = contraction_solve(digraph.vertex_count, arcs, root);
  if (!chosen) throw ArborescenceError("no k-arborescence");
  KArborescence out;
  out.root = root;
  out.k = 1;
  out.arc_ids = *chosen;
  std::sort(out.arc_ids.begin(), out.arc_ids.end());
  for (ArcId id : out.arc_ids) out.cost += digraph.arcs[id].cost;
  return out;
}

// ---------------------------------------------------------------------------
// Cut-covering LP with branch-and-bound.
//
// Arcs with equal (tail, head, cost) are interchangeable, so they share one
// integer variable bounded by the group size. Arcs entering the root never
// help and are left out.

struct ArcGroup {
  Vertex tail;
  Vertex head;
  Rational cost;
  std::vector<ArcId> arcs;  // ascending
};

std::vector<ArcGroup> group_arcs(const Digraph& digraph, Vertex root) {
  std::vector<ArcGroup> groups;
  std::map<std::tuple<Vertex, Vertex, std::string>, std::size_t> index;
  for (int i = 0; i < static_cast<int>(digraph.arcs.size()); ++i) {
    const Arc& a = digraph.arcs[i];
    if (a.head == root) continue;
    const auto key = std::make_tuple(a.tail, a.head, a.cost.to_string());
    auto [it, inserted] = index.emplace(key, groups.size());
    if (inserted) groups.push_back({a.tail, a.head, a.cost, {}});
    groups[it->second].arcs.push_back(i);
  }
  return groups;
}

class CutLpSolver {
 public:
  CutLpSolver(const Digraph& digraph, Vertex root, int k, ArborescenceStats* stats)
      : digraph_(digraph),
        root_(root),
        k_(k),
        stats_(stats),
        groups_(group_arcs(digraph, root)),
        lp_(costs(), std::vector<Rational>(groups_.size()), sizes()) {
    for (Vertex v = 0; v < digraph.vertex_count; ++v) {
      if (v != root) add_cut(VertexSet::of({v}).bits());
    }
  }

  KArborescence solve() {
    std::vector<Rational> lower(groups_.size());
    std::vector<Rational> upper = sizes();
    if (!bounds_feasible(upper)) throw ArborescenceError("no k-arborescence");
    branch(std::move(lower), std::move(upper));
    if (!incumbent_) throw ArborescenceError("no k-arborescence");
    return expand(*incumbent_);
  }

 private:
  std::vector<Rational> costs() const {
    std::vector<Rational> out;
    for (const auto& g : groups_) out.push_back(g.cost);
    return out;
  }
  std::vector<Rational> sizes() const {
    std::vector<Rational> out;
    for (const auto& g : groups_) out.emplace_back(static_cast<std::int64_t>(g.arcs.size()));
    return out;
  }

  void add_cut(std::uint64_t side) {
    if (!known_cuts_.insert(side).second) return;
    detail::BoundedSimplex::Row row;
    row.rhs = Rational(k_);
    for (int j = 0; j < static_cast<int>(groups_.size()); ++j) {
      const auto& g = groups_[j];
      if (!((side >> g.tail) & 1U) && ((side >> g.head) & 1U)) row.support.push_back(j);
    }
    lp_.add_row(std::move(row));
    if (stats_) ++stats_->cuts_added;
  }

  bool bounds_feasible(const std::vector<Rational>& upper) const {
    detail::DenseMatrix<std::int64_t> capacity(digraph_.vertex_count);
    for (std::size_t j = 0; j < groups_.size(); ++j) {
      // Bounds stay integral: they come from group sizes and floor/ceil branching.
      capacity(groups_[j].tail, groups_[j].head) += static_cast<std::int64_t>(upper[j].to_double());
    }
    return rooted_connected(capacity, root_, static_cast<std::int64_t>(k_));
  }

  // Adds every violated rooted cut found by root -> v max flows. Returns the
  // number of new rows.
  int separate(const std::vector<Rational>& x) {
    detail::DenseMatrix<Rational> capacity(digraph_.vertex_count);
    for (std::size_t j = 0; j < groups_.size(); ++j) {
      if (!x[j].is_zero()) capacity(groups_[j].tail, groups_[j].head) += x[j];
    }
    const std::size_t before = known_cuts_.size();
    const Rational target(k_);
    const std::uint64_t everything = VertexSet::full(digraph_.vertex_count).bits();
    for (Vertex v = 0; v < digraph_.vertex_count; ++v) {
      if (v == root_) continue;
      const auto flow = detail::max_flow(capacity, std::uint64_t{1} << root_, std::uint64_t{1} << v,
                                         std::optional<Rational>(target));
      if (flow.value < target) add_cut(everything & ~flow.source_side);
    }
    return static_cast<int>(known_cuts_.size() - before);
  }

  void branch(std::vector<Rational> lower, std::vector<Rational> upper) {
    if (stats_) ++stats_->branch_nodes;
    if (!bounds_feasible(upper)) return;
    lp_.set_bounds(lower, upper);
    detail::BoundedSimplex::Solution solution;
    for (;;) {
      auto lp = lp_.solve();
      if (!lp) return;  // unreachable after bounds_feasible; kept for safety of callers
      if (stats_) {
        ++stats_->lp_solves;
        stats_->pivots += lp->pivots;
      }
      solution = std::move(*lp);
      if (incumbent_ && solution.objective >= incumbent_->objective) return;
      if (separate(solution.x) == 0) break;
    }
    int fractional = -1;
    for (int j = 0; j < static_cast<int>(solution.x.size()); ++j) {
      if (!solution.x[j].is_integer()) {
        fractional = j;
        break;
      }
    }
    if (fractional < 0) {
      incumbent_ = std::move(solution);
      return;
    }
    const Rational down = solution.x[fractional].floor();
    {
      auto child_upper = upper;
      child_upper[fractional] = down;
      branch(lower, std::move(child_upper));
    }
    lower[fractional] = down + Rational(1);
    branch(std::move(lower), std::move(upper));
  }

  KArborescence expand(const detail::BoundedSimplex::Solution& solution) const {
    std::vector<ArcId> arcs;
    for (std::size_t j = 0; j < groups_.size(); ++j) {
      const auto count = static_cast<std::size_t>(solution.x[j].to_double());
      for (std::size_t c = 0; c < count; ++c) arcs.push_back(groups_[j].arcs[c]);
    }
    std::sort(arcs.begin(), arcs.end());
    // Zero-cost surplus: drop arcs from the highest index down while the rest
    // still has k disjoint arborescences.
    const std::size_t target = static_cast<std::size_t>(k_) * static_cast<std::size_t>(digraph_.vertex_count - 1);
    for (std::size_t i = arcs.size(); i-- > 0 && arcs.size() > target;) {
      std::vector<ArcId> trial = arcs;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (has_k_arborescence(digraph_, trial, root_, k_)) arcs = std::move(trial);
    }
    KArborescence out;
    out.root = root_;
    out.k = k_;
    out.arc_ids = std::move(arcs);
    for (ArcId id : out.arc_ids) out.cost += digraph_.arcs[id].cost;
    return out;
  }

  const Digraph& digraph_;
  Vertex root_;
  int k_;
  ArborescenceStats* stats_;
  std::vector<ArcGroup> groups_;
  detail::BoundedSimplex lp_;
  std::set<std::uint64_t> known_cuts_;
  std::optional<detail::BoundedSimplex::Solution> incumbent_;
};

}  // namespace

Digraph bidirect(const MultiGraph& graph, std::span<const std::int64_t> multiplicity) {
  if (multiplicity.size() != static_cast<std::size_t>(graph.edge_count())) {
    throw GraphError("multiplicity vector size does not match edge count");
  }
  Digraph out;
  out.vertex_count = graph.vertex_count();
  for (const auto& e : graph.edges()) {
    if (multiplicity[e.id] < 0) throw GraphError("negative multiplicity");
    for (std::int64_t c = 0; c < multiplicity[e.id]; ++c) {
      out.arcs.push_back({e.u, e.v, e.cost, e.id});
      out.arcs.push_back({e.v, e.u, e.cost, e.id});
    }
  }
  return out;
}

bool has_k_arborescence(const Digraph& digraph, std::span<const ArcId> arcs, Vertex root, int k) {
  if (k <= 0 || digraph.vertex_count == 1) return true;
  return rooted_connected(arc_count_matrix(digraph, arcs), root, static_cast<std::int64_t>(k));
}

bool has_k_arborescence(const Digraph& digraph, Vertex root, int k) {
  std::vector<ArcId> all(digraph.arcs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ArcId>(i);
  return has_k_arborescence(digraph, all, root, k);
}

KArborescence min_cost_k_arborescence(const Digraph& digraph, Vertex root, int k, ArborescenceMethod method,
                                      ArborescenceStats* stats) {
  validate_digraph(digraph, root, k);
  if (digraph.vertex_count == 1) return KArborescence{root, k, {}, Rational(0)};
  if (!has_k_arborescence(digraph, root, k)) throw ArborescenceError("no k-arborescence");
  if (method == ArborescenceMethod::Contraction && k != 1) {
    throw ArborescenceError("contraction method handles k = 1 only");
  }
  if (method == ArborescenceMethod::Contraction || (method == ArborescenceMethod::Automatic && k == 1)) {
    return solve_by_contraction(digraph, root);
  }
  return CutLpSolver(digraph, root, k, stats).solve();
}

bool is_k_arborescence(const Digraph& digraph, const KArborescence& tree) {
  const int n = digraph.vertex_count;
  if (tree.k < 1 || tree.root < 0 || tree.root >= n) return false;
  if (tree.arc_ids.size() != static_cast<std::size_t>(tree.k) * static_cast<std::size_t>(n - 1)) return false;
  if (!std::is_sorted(tree.arc_ids.begin(), tree.arc_ids.end()) ||
      std::adjacent_find(tree.arc_ids.begin(), tree.arc_ids.end()) != tree.arc_ids.end()) {
    return false;
  }
  std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
  for (ArcId id : tree.arc_ids) {
    if (id < 0 || id >= static_cast<ArcId>(digraph.arcs.size())) return false;
    ++in_degree[digraph.arcs[id].head];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_degree[v] != (v == tree.root ? 0 : tree.k)) return false;
  }
  return has_k_arborescence(digraph, tree.arc_ids, tree.root, tree.k);
}

std::vector<std::vector<ArcId>> decompose_k_arborescence(const Digraph& digraph, const KArborescence& tree) {
  if (!is_k_arborescence(digraph, tree)) throw ArborescenceError("not a k-arborescence");
  const int n = digraph.vertex_count;
  std::vector<ArcId> remaining = tree.arc_ids;
  std::vector<std::vector<ArcId>> out;
  for (int t = tree.k; t >= 1; --t) {
    // Grow one arborescence; an arc is accepted if the arcs left over still
    // contain t-1 disjoint arborescences (such an arc always exists).
    VertexSet reached = VertexSet::of({tree.root});
    std::vector<ArcId> taken;
    std::vector<ArcId> rest = remaining;
    while (reached.size() < n) {
      bool grown = false;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        const Arc& a = digraph.arcs[rest[i]];
        if (!reached.contains(a.tail) || reached.contains(a.head)) continue;
        std::vector<ArcId> trial = rest;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (!has_k_arborescence(digraph, trial, tree.root, t - 1)) continue;
        taken.push_back(rest[i]);
        reached.insert(a.head);
        rest = std::move(trial);
        grown = true;
        break;
      }
      if (!grown) throw ArborescenceError("decomposition failed");
    }
    std::sort(taken.begin(), taken.end());
    out.push_back(std::move(taken));
    remaining = std::move(rest);
  }
  return out;
}

EdgeSet project_arcs_to_edges(const KArborescence& tree, const Digraph& digraph) {
  std::vector<EdgeId> origins;
  for (ArcId id : tree.arc_ids) origins.push_back(digraph.arcs.at(static_cast<std::size_t>(id)).origin);
  return make_edge_set(std::move(origins));
}

}  // namespace fgc
