#include "fgc/cuts.hpp"

#include <algorithm>
#include <numeric>

namespace fgc {

namespace {

struct WeightedEdge {
  Vertex u;
  Vertex v;
  Rational weight;
};

// Union-find where each vertex stores the side parity relative to its parent.
// Copied by value at each branch; graphs are small.
struct ParityForest {
  std::vector<int> parent;
  std::vector<char> parity;

  explicit ParityForest(int n) : parent(static_cast<std::size_t>(n)), parity(static_cast<std::size_t>(n), 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, char> find(int v) const {
    char p = 0;
    while (parent[v] != v) {
      p ^= parity[v];
      v = parent[v];
    }
    return {v, p};
  }
  void unite(int root_a, int root_b, char relative) {
    parent[root_b] = root_a;
    parity[root_b] = relative;
  }
};

class CutSearch {
 public:
  CutSearch(int n, std::vector<WeightedEdge> edges, Rational threshold)
      : n_(n), edges_(std::move(edges)), threshold_(std::move(threshold)) {}

  std::vector<std::pair<Rational, VertexSet>> run() {
    recurse(0, ParityForest(n_), Rational(0));
    return std::move(found_);
  }

 private:
  void recurse(std::size_t index, ParityForest forest, Rational committed) {
    if (committed > threshold_) return;
    if (index == edges_.size()) {
      record(forest, committed);
      return;
    }
    const auto& e = edges_[index];
    const auto [ru, pu] = forest.find(e.u);
    const auto [rv, pv] = forest.find(e.v);
    if (ru == rv) {
      recurse(index + 1, std::move(forest), pu != pv ? committed + e.weight : committed);
      return;
    }
    // Contract branch: endpoints on the same side.
    {
      ParityForest same = forest;
      same.unite(ru, rv, static_cast<char>(pu ^ pv));
      recurse(index + 1, std::move(same), committed);
    }
    // Separate branch: the edge crosses the cut.
    forest.unite(ru, rv, static_cast<char>(pu ^ pv ^ 1));
    recurse(index + 1, std::move(forest), committed + e.weight);
  }

  void record(const ParityForest& forest, const Rational& weight) {
    const auto [root0, parity0] = forest.find(0);
    VertexSet side;
    for (int v = 0; v < n_; ++v) {
      const auto [root, parity] = forest.find(v);
      if (root != root0) throw GraphError("positive-weight support is disconnected");
      if (parity != parity0) side.insert(v);
    }
    if (!side.empty()) found_.emplace_back(weight, side);
  }

  int n_;
  std::vector<WeightedEdge> edges_;
  Rational threshold_;
  std::vector<std::pair<Rational, VertexSet>> found_;
};

std::vector<CutSide> sorted_sides(std::vector<std::pair<Rational, VertexSet>> found, int n) {
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return lex_less(a.second, b.second);
  });
  std::vector<CutSide> out;
  out.reserve(found.size());
  for (const auto& [weight, side] : found) out.emplace_back(side, n);
  return out;
}

}  // namespace

bool CutCollection::contains(VertexSet side) const {
  if (cuts.empty()) return false;
  const int n = cuts.front().vertex_count();
  const VertexSet full = VertexSet::full(n);
  if (side.empty() || side == full) return false;
  const CutSide canonical(side, n);
  return std::find(cuts.begin(), cuts.end(), canonical) != cuts.end();
}

std::vector<CutSide> enumerate_cuts_up_to(const MultiGraph& graph, const EdgeWeights& weight,
                                          const Rational& threshold) {
  const int n = graph.vertex_count();
  if (n < 2) throw GraphError("cut enumeration needs at least 2 vertices");
  if (weight.size() != static_cast<std::size_t>(graph.edge_count())) {
    throw GraphError("weight vector size does not match edge count");
  }
  std::vector<WeightedEdge> edges;
  EdgeSet support;
  for (const auto& e : graph.edges()) {
    if (weight[e.id].sign() < 0) throw GraphError("negative cut weight");
    if (weight[e.id].is_zero()) continue;
    edges.push_back({e.u, e.v, weight[e.id]});
    support.push_back(e.id);
  }
  if (!is_connected(graph, support)) throw GraphError("positive-weight support is disconnected");
  return sorted_sides(CutSearch(n, std::move(edges), threshold).run(), n);
}

CutCollection enumerate_near_min_cuts(const MultiGraph& graph, const EdgeWeights& weight,
                                      const Rational& alpha) {
  if (alpha < Rational(1)) throw GraphError("approximation radius must be >= 1");
  const Rational lambda = min_cut_value(graph, weight);
  if (lambda.is_zero()) throw GraphError("positive-weight support is disconnected");
  CutCollection out;
  out.cuts = enumerate_cuts_up_to(graph, weight, alpha * lambda);
  out.reference_value = lambda;
  out.approximation_radius = alpha;
  return out;
}

CutCollection k_edge_cut_collection(const MultiGraph& graph, const EdgeSet& edges, int k) {
  if (k < 1) throw GraphError("k must be positive");
  EdgeWeights unit(static_cast<std::size_t>(graph.edge_count()), Rational(0));
  for (EdgeId id : edges) unit[id] = Rational(1);
  const Rational lambda = graph.vertex_count() < 2 ? Rational(k + 1) : min_cut_value(graph, unit);
  if (lambda < Rational(k)) throw GraphError("edge set is not k-edge-connected");
  CutCollection out;
  out.reference_value = lambda;
  if (lambda == Rational(k)) out.cuts = enumerate_cuts_up_to(graph, unit, Rational(k));
  return out;
}

std::vector<CutSide> enumerate_cuts_bruteforce(const MultiGraph& graph, const EdgeWeights& weight,
                                               const Rational& threshold) {
  const int n = graph.vertex_count();
  std::vector<std::pair<Rational, VertexSet>> found;
  // Canonical sides exclude vertex 0: iterate over nonempty subsets of 1..n-1.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const VertexSet side(bits << 1);
    Rational w = cut_weight(graph, weight, side);
    if (w <= threshold) found.emplace_back(std::move(w), side);
  }
  return sorted_sides(std::move(found), n);
}

}  // namespace fgc
