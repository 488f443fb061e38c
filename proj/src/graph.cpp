#include "fgc/graph.hpp"

#include <algorithm>
#include <numeric>

#include "fgc/detail/dense_flow.hpp"

namespace fgc {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  // Keeps the smaller root so component representatives are minimal vertices.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

template <typename W>
detail::DenseMatrix<W> weight_matrix(const MultiGraph& graph, const std::vector<W>& weight) {
  detail::DenseMatrix<W> matrix(graph.vertex_count());
  for (const auto& e : graph.edges()) {
    matrix(e.u, e.v) += weight[e.id];
    matrix(e.v, e.u) += weight[e.id];
  }
  return matrix;
}

void require_weights(const MultiGraph& graph, std::size_t count) {
  if (count != static_cast<std::size_t>(graph.edge_count())) {
    throw GraphError("weight vector size does not match edge count");
  }
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<Vertex> vertices) {
  VertexSet set;
  for (Vertex v : vertices) set.insert(v);
  return set;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::uint64_t bits = bits_; bits != 0; bits &= bits - 1) {
    out.push_back(std::countr_zero(bits));
  }
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    const int lx = std::countr_zero(x);
    const int ly = std::countr_zero(y);
    if (lx != ly) return lx < ly;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

CutSide::CutSide(VertexSet side, int n) : n_(n) {
  const VertexSet full = VertexSet::full(n);
  if (side.empty() || !side.subset_of(full) || side == full) {
    throw GraphError("cut side must be a nonempty proper subset of V");
  }
  members_ = side.contains(0) ? side.complement(n) : side;
}

EdgeSet make_edge_set(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

EdgeSet all_edges(const MultiGraph& graph) {
  EdgeSet out(static_cast<std::size_t>(graph.edge_count()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

bool contains(const EdgeSet& set, EdgeId id) { return std::binary_search(set.begin(), set.end(), id); }

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Rational total_cost(const MultiGraph& graph, const EdgeSet& set) {
  Rational sum;
  for (EdgeId id : set) sum += graph.edge(id).cost;
  return sum;
}

MultiGraph build_graph(int n, std::span<const EdgeSpec> edges) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("vertex count must lie in 1.." + std::to_string(kMaxVertices));
  }
  MultiGraph graph;
  graph.n_ = n;
  graph.edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& spec = edges[i];
    const std::string where = "edge " + std::to_string(i) + ": ";
    if (spec.u < 0 || spec.u >= n || spec.v < 0 || spec.v >= n) {
      throw GraphError(where + "endpoint out of range");
    }
    if (spec.u == spec.v) throw GraphError(where + "self-loop");
    if (spec.cost.sign() < 0) throw GraphError(where + "negative cost");
    if (spec.capacity < 0) throw GraphError(where + "negative capacity");
    graph.edges_.push_back(EdgeRecord{static_cast<EdgeId>(i), spec.u, spec.v, spec.cost, spec.label, spec.capacity});
  }
  return graph;
}

std::vector<EdgeId> cut_edges(const MultiGraph& graph, VertexSet side) {
  const VertexSet full = VertexSet::full(graph.vertex_count());
  if (side.empty() || side == full || !side.subset_of(full)) {
    throw GraphError("cut side must be a nonempty proper subset of V");
  }
  std::vector<EdgeId> out;
  for (const auto& e : graph.edges()) {
    if (e.crosses(side)) out.push_back(e.id);
  }
  return out;
}

std::vector<EdgeId> cut_edges(const MultiGraph& graph, const CutSide& side) {
  return cut_edges(graph, side.members());
}

std::vector<EdgeId> cut_edges(const MultiGraph& graph, const EdgeSet& within, VertexSet side) {
  std::vector<EdgeId> out;
  for (EdgeId id : within) {
    if (graph.edge(id).crosses(side)) out.push_back(id);
  }
  return out;
}

Rational cut_weight(const MultiGraph& graph, const EdgeWeights& weight, VertexSet side) {
  Rational sum;
  for (const auto& e : graph.edges()) {
    if (e.crosses(side)) sum += weight[e.id];
  }
  return sum;
}

Contraction contract(const MultiGraph& graph, const EdgeSet& contracted) {
  const int n = graph.vertex_count();
  UnionFind uf(n);
  for (EdgeId id : contracted) {
    const auto& e = graph.edge(id);
    uf.unite(e.u, e.v);
  }
  Contraction out;
  out.vertex_map.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> root_index(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int root = uf.find(v);
    if (root_index[root] < 0) root_index[root] = next++;
    out.vertex_map[v] = root_index[root];
  }
  std::vector<EdgeSpec> specs;
  for (const auto& e : graph.edges()) {
    const Vertex a = out.vertex_map[e.u];
    const Vertex b = out.vertex_map[e.v];
    if (a == b) continue;
    specs.push_back(EdgeSpec{a, b, e.cost, e.label, e.capacity});
    out.original_edge.push_back(e.id);
  }
  out.graph = build_graph(next, specs);
  return out;
}

std::vector<VertexSet> components(const MultiGraph& graph, const EdgeSet& edges) {
  const int n = graph.vertex_count();
  UnionFind uf(n);
  for (EdgeId id : edges) {
    const auto& e = graph.edge(id);
    uf.unite(e.u, e.v);
  }
  std::vector<VertexSet> by_root(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_root[uf.find(v)].insert(v);
  std::vector<VertexSet> out;
  for (const auto& set : by_root) {
    if (!set.empty()) out.push_back(set);
  }
  return out;
}

bool is_connected(const MultiGraph& graph, const EdgeSet& edges) {
  return components(graph, edges).size() == 1;
}

Rational min_cut_value(const MultiGraph& graph, const EdgeWeights& weight) {
  require_weights(graph, weight.size());
  if (graph.vertex_count() < 2) throw GraphError("min cut needs at least 2 vertices");
  return detail::stoer_wagner(weight_matrix(graph, weight)).value;
}

std::int64_t min_cut_value(const MultiGraph& graph, std::span<const std::int64_t> capacity_per_edge) {
  require_weights(graph, capacity_per_edge.size());
  if (graph.vertex_count() < 2) throw GraphError("min cut needs at least 2 vertices");
  const std::vector<std::int64_t> weight(capacity_per_edge.begin(), capacity_per_edge.end());
  return detail::stoer_wagner(weight_matrix(graph, weight)).value;
}

MinCut global_min_cut(const MultiGraph& graph, const EdgeWeights& weight) {
  require_weights(graph, weight.size());
  const int n = graph.vertex_count();
  if (n < 2) throw GraphError("min cut needs at least 2 vertices");
  const auto matrix = weight_matrix(graph, weight);
  const Rational lambda = detail::stoer_wagner(matrix).value;

  // Greedy lexicographic search: decide vertices 1..n-1 in order, keeping
  // `chosen` on the canonical side and `excluded` (always holding 0) opposite.
  // A partial decision is extendable iff the min cut separating the two
  // groups equals lambda.
  VertexSet chosen;
  VertexSet excluded = VertexSet::of({0});
  for (Vertex v = 1; v < n; ++v) {
    if (!chosen.empty() && cut_weight(graph, weight, chosen) == lambda) break;
    const VertexSet trial = chosen | VertexSet::of({v});
    const auto flow = detail::max_flow(matrix, trial.bits(), excluded.bits());
    if (flow.value == lambda) {
      chosen = trial;
    } else {
      excluded.insert(v);
    }
  }
  return MinCut{lambda, CutSide(chosen, n)};
}

}  // namespace fgc
