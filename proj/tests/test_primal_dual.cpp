#include <doctest.h>

#include <random>

#include "fgc/checkers.hpp"
#include "fgc/primal_dual.hpp"
#include "fgc/solvers.hpp"
#include "support.hpp"

using namespace fgc;

namespace {

// Cheapest subset of `candidates` covering every f = 1 set.
Rational brute_min_augmentation(const MultiGraph& g, const EdgeSet& candidates, const RequirementOracle& f) {
  std::optional<Rational> best;
  const std::size_t m = candidates.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    EdgeSet chosen;
    Rational cost;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) {
        chosen.push_back(candidates[i]);
        cost += g.edge(candidates[i]).cost;
      }
    }
    if (best && cost >= *best) continue;
    bool ok = true;
    for (VertexSet s : f.active_sets()) {
      bool crossed = false;
      for (EdgeId id : chosen) crossed = crossed || g.edge(id).crosses(s);
      ok = ok && crossed;
    }
    if (ok) best = cost;
  }
  return *best;
}

MultiGraph non_maximal_fixture() {
  // v1 v2 v3 -> 0 1 2; every edge unsafe.
  return build_graph(3, {{0, 1, 1}, {0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
}

MultiGraph mixed_square_fixture() {
  // v1 v2 v3 v4 -> 0 1 2 3.
  return build_graph(4, {{1, 2, 1, Label::Unsafe},
                         {0, 1, 1, Label::Safe},
                         {0, 1, 1, Label::Safe},
                         {2, 3, 1, Label::Safe},
                         {2, 3, 1, Label::Safe},
                         {3, 0, 1, Label::Safe}});
}

RequirementOracle requirement_for(const MultiGraph& g, int k) {
  const EdgeSet f1 = all_edges(g);
  return build_requirement(k_edge_cut_collection(g, f1, k), f1, g);
}

}  // namespace

TEST_SUITE("primal-dual") {
  TEST_CASE("non-maximal fixture violates maximality") {
    const auto f = requirement_for(non_maximal_fixture(), 2);
    CHECK_FALSE(f.evaluate(VertexSet::of({0})));
    CHECK_FALSE(f.evaluate(VertexSet::of({1})));
    CHECK(f.evaluate(VertexSet::of({0, 1})));
    CHECK(f.evaluate(VertexSet::of({2})));
    CHECK(is_uncrossable_bruteforce(f));
  }

  TEST_CASE("mixed-square fixture values") {
    const auto f = requirement_for(mixed_square_fixture(), 2);
    CHECK(f.evaluate(VertexSet::of({0, 1})));
    CHECK_FALSE(f.evaluate(VertexSet::of({1, 2})));
    CHECK(is_uncrossable_bruteforce(f));
  }

  TEST_CASE("all-safe stage one gives the zero function") {
    auto g = build_graph(4, {{0, 1, 1, Label::Safe}, {1, 2, 1, Label::Safe}, {2, 3, 1, Label::Safe},
                             {3, 0, 1, Label::Safe}});
    CHECK(requirement_for(g, 2).identically_zero());
  }

  TEST_CASE("minimal violated sets") {
    const auto g = non_maximal_fixture();
    const auto f = requirement_for(g, 2);
    CHECK(minimal_violated_sets(f, g, all_edges(g)).empty());
    std::vector<std::uint64_t> canonical;
    for (VertexSet s : minimal_violated_sets(f, g, {})) canonical.push_back(CutSide(s, 3).members().bits());
    std::sort(canonical.begin(), canonical.end());
    canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());
    CHECK(canonical == std::vector<std::uint64_t>{CutSide(VertexSet::of({0, 1}), 3).members().bits()});

    const auto path = build_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    const auto nested = RequirementOracle::from_sets(4, {VertexSet::of({1}), VertexSet::of({1, 2})});
    CHECK(minimal_violated_sets(nested, path, {}) == std::vector<VertexSet>{VertexSet::of({1})});
  }

  TEST_CASE("wgmv on hand fixtures") {
    const auto two = build_graph(2, {{0, 1, 2}, {0, 1, 5}});
    const auto single = RequirementOracle::symmetric(2, {CutSide(VertexSet::of({1}), 2)});
    const auto r1 = wgmv_solve(two, all_edges(two), single);
    CHECK(r1.augmentation == EdgeSet{0});
    // Both orientations of the cut are active and grow together.
    CHECK(r1.dual.total == Rational(2));

    const auto four = build_graph(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 3}, {0, 3, 1}});
    const auto disjoint =
        RequirementOracle::symmetric(4, {CutSide(VertexSet::of({1}), 4), CutSide(VertexSet::of({2}), 4)});
    const auto r2 = wgmv_solve(four, all_edges(four), disjoint);
    CHECK(r2.augmentation == EdgeSet{1});
    CHECK(r2.addition_order == std::vector<EdgeId>{1});
    CHECK(total_cost(four, r2.augmentation) == brute_min_augmentation(four, all_edges(four), disjoint));

    const auto zero = RequirementOracle::symmetric(4, {});
    const auto r3 = wgmv_solve(four, all_edges(four), zero);
    CHECK(r3.augmentation.empty());
    CHECK(r3.dual.total == Rational(0));

    CHECK_THROWS_WITH(wgmv_solve(two, {}, single), "augmentation infeasible");
  }

  TEST_CASE("uncrossable check rejects a non-symmetric function") {
    CHECK(is_uncrossable_bruteforce(RequirementOracle::symmetric(4, {})));
    CHECK_FALSE(is_uncrossable_bruteforce(RequirementOracle::from_sets(4, {VertexSet::of({1})})));
  }

  TEST_CASE("certificates on random stage-two runs") {
    std::mt19937_64 rng(61);
    int runs = 0;
    for (int trial = 0; trial < 120 && runs < 40; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 4);
      const auto g = testing::random_graph(rng, n, n + 2 + static_cast<int>(rng() % 6), 6);
      const int k = 1 + static_cast<int>(rng() % 2);
      const FgcInstance inst{g, k, 1};
      if (!check_k1(inst, all_edges(g))) continue;
      const auto report = solve_k1(inst);
      REQUIRE(report.k1.has_value());
      const auto& t = *report.k1;
      ++runs;
      const Rational c2 = total_cost(g, t.augmentation.augmentation);
      CHECK(c2 <= Rational(2) * t.augmentation.dual.total);
      CHECK(dual_feasible(g, t.candidates, t.augmentation.dual));
      CHECK(is_uncrossable_bruteforce(t.requirement));
      CHECK(covers_requirement(t.requirement, g, t.augmentation.augmentation));
      for (EdgeId id : t.augmentation.augmentation) {
        CHECK_FALSE(covers_requirement(t.requirement, g, set_difference(t.augmentation.augmentation, {id})));
      }
      if (t.candidates.size() <= 14) {
        CHECK(t.augmentation.dual.total <= brute_min_augmentation(g, t.candidates, t.requirement));
      }
      // Same input, same output.
      CHECK(wgmv_solve(g, t.candidates, t.requirement).augmentation == t.augmentation.augmentation);
    }
    CHECK(runs >= 20);
  }
}
