#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgc/rational.hpp"

namespace fgc {

using Vertex = int;
using EdgeId = int;

/// Vertex sets are 64-bit masks, so graphs are limited to this many vertices.
inline constexpr int kMaxVertices = 64;

enum class Label { Safe, Unsafe };

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  static VertexSet of(std::initializer_list<Vertex> vertices);
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  [[nodiscard]] constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] std::vector<Vertex> members() const;

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  [[nodiscard]] constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] constexpr VertexSet complement(int n) const {
    return VertexSet(full(n).bits_ & ~bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member lists ({1} < {1,2} < {2}).
bool lex_less(VertexSet a, VertexSet b);

/// One side of a cut, stored so that vertex 0 is never a member.
class CutSide {
 public:
  /// Canonicalizes `side` (replaces it by its complement when it holds vertex 0).
  /// Throws GraphError when `side` is empty or all of V.
  CutSide(VertexSet side, int n);

  [[nodiscard]] VertexSet members() const { return members_; }
  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] VertexSet complement() const { return members_.complement(n_); }

  friend bool operator==(const CutSide& a, const CutSide& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  VertexSet members_;
  int n_ = 0;
};

struct EdgeRecord {
  EdgeId id = 0;
  Vertex u = 0;
  Vertex v = 0;
  Rational cost;
  Label label = Label::Unsafe;
  std::int64_t capacity = 1;

  [[nodiscard]] bool safe() const { return label == Label::Safe; }
  [[nodiscard]] bool crosses(VertexSet side) const { return side.contains(u) != side.contains(v); }
};

/// Input description of one edge for build_graph.
struct EdgeSpec {
  Vertex u = 0;
  Vertex v = 0;
  Rational cost;
  Label label = Label::Unsafe;
  std::int64_t capacity = 1;
};

/// Undirected multigraph on vertices 0..n-1. Immutable after construction;
/// the edge list order (= id order) is the tie-breaking order everywhere.
class MultiGraph {
 public:
  MultiGraph() = default;

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const EdgeRecord& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }
  [[nodiscard]] std::span<const EdgeRecord> edges() const { return edges_; }

 private:
  friend MultiGraph build_graph(int n, std::span<const EdgeSpec> edges);
  int n_ = 0;
  std::vector<EdgeRecord> edges_;
};

/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

/// Sorts and deduplicates.
EdgeSet make_edge_set(std::vector<EdgeId> ids);
EdgeSet all_edges(const MultiGraph& graph);
bool contains(const EdgeSet& set, EdgeId id);
EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b);
Rational total_cost(const MultiGraph& graph, const EdgeSet& set);

/// Per-edge weights indexed by edge id.
using EdgeWeights = std::vector<Rational>;

MultiGraph build_graph(int n, std::span<const EdgeSpec> edges);
inline MultiGraph build_graph(int n, std::initializer_list<EdgeSpec> edges) {
  return build_graph(n, std::span<const EdgeSpec>(edges.begin(), edges.size()));
}

/// Edge ids with exactly one endpoint in `side`, in id order.
std::vector<EdgeId> cut_edges(const MultiGraph& graph, const CutSide& side);
std::vector<EdgeId> cut_edges(const MultiGraph& graph, VertexSet side);
/// Same, restricted to the edges of `within`.
std::vector<EdgeId> cut_edges(const MultiGraph& graph, const EdgeSet& within, VertexSet side);

Rational cut_weight(const MultiGraph& graph, const EdgeWeights& weight, VertexSet side);

struct Contraction {
  MultiGraph graph;
  /// Old vertex -> new vertex.
  std::vector<Vertex> vertex_map;
  /// New edge id -> id of the edge it came from.
  std::vector<EdgeId> original_edge;
};

/// Contracts every component of (V, contracted) to a single vertex, numbering
/// components by their smallest original vertex. Self-loops are dropped;
/// parallel edges are kept in original id order.
Contraction contract(const MultiGraph& graph, const EdgeSet& contracted);

bool is_connected(const MultiGraph& graph, const EdgeSet& edges);

/// Vertex sets of the components of (V, edges), ordered by smallest vertex.
std::vector<VertexSet> components(const MultiGraph& graph, const EdgeSet& edges);

struct MinCut {
  Rational value;
  CutSide side;
};

/// Minimum weight cut over all bipartitions. Among optimal cuts the canonical
/// side that is smallest under lex_less is returned. Requires n >= 2.
MinCut global_min_cut(const MultiGraph& graph, const EdgeWeights& weight);

/// Value only; cheaper than global_min_cut (no tie-break search).
Rational min_cut_value(const MultiGraph& graph, const EdgeWeights& weight);

/// Integer-capacity variant: each edge id carries the given capacity (zero
/// removes it).
std::int64_t min_cut_value(const MultiGraph& graph, std::span<const std::int64_t> capacity_per_edge);

}  // namespace fgc
