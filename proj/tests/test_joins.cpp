#include <doctest.h>

#include <random>

#include "fgc/joins.hpp"
#include "support.hpp"

using namespace fgc;

TEST_SUITE("joins") {
  TEST_CASE("safe_max_spanning_tree") {
    const auto safe_tri = build_graph(3, {{0, 1, 1, Label::Safe}, {1, 2, 1, Label::Safe}, {0, 2, 1, Label::Safe}});
    CHECK(safe_max_spanning_tree(safe_tri) == EdgeSet{0, 1});

    const auto fig = gen_figure1(2);
    const auto tree = safe_max_spanning_tree(fig.graph);
    CHECK(tree.size() == 3);
    int safe = 0;
    for (EdgeId id : tree) safe += fig.graph.edge(id).safe() ? 1 : 0;
    CHECK(safe == 1);

    const auto path = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(safe_max_spanning_tree(path) == EdgeSet{0, 1});

    CHECK_THROWS_AS(safe_max_spanning_tree(build_graph(3, {{0, 1, 1}})), GraphError);
  }

  TEST_CASE("odd_degree_set") {
    const auto path = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(odd_degree_set(path, all_edges(path)) == VertexSet::of({0, 2}));
    const auto cycle = build_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    CHECK(odd_degree_set(cycle, all_edges(cycle)).empty());
    const auto star = build_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    CHECK(odd_degree_set(star, all_edges(star)) == VertexSet::full(4));
    const std::vector<EdgeId> doubled{0, 0};
    CHECK(odd_degree_set(path, doubled).empty());
  }

  TEST_CASE("min_cardinality_wjoin examples") {
    const auto path = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(min_cardinality_wjoin(path, VertexSet::of({0, 2})) == EdgeSet{0, 1});
    CHECK(min_cardinality_wjoin(path, VertexSet()).empty());
    const auto cycle = build_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    CHECK(min_cardinality_wjoin(cycle, VertexSet::of({0, 2})).size() == 2);

    CHECK_THROWS_WITH(min_cardinality_wjoin(path, VertexSet::of({0})), "terminal set has odd size");
    const auto split = build_graph(4, {{0, 1, 1}, {2, 3, 1}});
    CHECK_THROWS_WITH(min_cardinality_wjoin(split, VertexSet::of({0, 2})), "no W-join exists");
    CHECK(min_cardinality_wjoin(split, VertexSet::full(4)) == EdgeSet{0, 1});
  }

  TEST_CASE("exhaustive optimality on small graphs") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 6);
      const int m = std::min<int>(16, n - 1 + static_cast<int>(rng() % 8));
      const auto g = testing::random_graph(rng, n, m, 1);
      const std::uint64_t w = rng() & VertexSet::full(n).bits();
      if (std::popcount(w) % 2 != 0) continue;
      const auto expected = testing::brute_wjoin_size(g, w);
      REQUIRE(expected.has_value());
      const auto j = min_cardinality_wjoin(g, VertexSet(w));
      CHECK(static_cast<int>(j.size()) == *expected);
      CHECK(odd_degree_set(g, j) == VertexSet(w));
      ++checked;
    }
    CHECK(checked >= 50);
  }
}
