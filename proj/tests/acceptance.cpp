// Acceptance checks. Usage: fgc_acceptance [criterion...]; no argument runs
// all eight. Prints one [PASS]/[FAIL] line per criterion. Every comparison is
// exact rational arithmetic (zero tolerance).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fgc/arborescence.hpp"
#include "fgc/checkers.hpp"
#include "fgc/cuts.hpp"
#include "fgc/joins.hpp"
#include "fgc/oracle.hpp"
#include "fgc/primal_dual.hpp"
#include "fgc/solvers.hpp"
#include "support.hpp"

using namespace fgc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Records failures and counts checks.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  [[nodiscard]] long checks() const { return checks_; }
  [[nodiscard]] Outcome outcome(const std::string& summary) const {
    std::ostringstream out;
    out << summary << "; " << checks_ << " checks, " << failures_ << " violations";
    if (!first_.empty()) out << "; first: " << first_;
    return {failures_ == 0, out.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

std::string str(const Rational& r) { return r.to_string(); }

EdgeSet random_subset(std::mt19937_64& rng, int m, int keep_percent) {
  EdgeSet f;
  for (EdgeId id = 0; id < m; ++id) {
    if (static_cast<int>(rng() % 100) < keep_percent) f.push_back(id);
  }
  return f;
}

int count_label(const MultiGraph& g, const EdgeSet& f, Label label) {
  int n = 0;
  for (EdgeId id : f) n += g.edge(id).label == label ? 1 : 0;
  return n;
}

Outcome figure_one() {
  Tally t;
  const Rational alpha = SolverConfig{}.two_ecss_factor;
  const Rational factor = Rational(4) * alpha / (Rational(2) * alpha + Rational(1));
  std::ostringstream rows;
  for (int n = 2; n <= 6; ++n) {
    const auto inst = gen_figure1(n);
    const auto opt = brute_force_opt(inst);
    const auto baseline = forest_first_baseline(inst);
    const auto solved = solve_unweighted_fgc(inst);
    const std::string tag = "n=" + std::to_string(n);
    t.check(opt.optimum && *opt.optimum == Rational(2 * n), tag + " OPT != 2n");
    t.check(static_cast<int>(baseline.size()) >= 3 * n - 1, tag + " baseline below 3n-1");
    t.check(check_1k(inst, baseline), tag + " baseline infeasible");
    t.check(check_1k(inst, solved.solution), tag + " solver output infeasible");
    t.check(Rational(static_cast<std::int64_t>(solved.solution.size())) <= factor * Rational(2 * n),
            tag + " solver size above bound");
    rows << " n=" << n << ":OPT=" << (opt.optimum ? str(*opt.optimum) : "-") << ",base=" << baseline.size()
         << ",fgc=" << solved.solution.size();
  }
  return t.outcome("Figure-1 family, alpha=" + str(alpha) + rows.str());
}

Outcome checker_equivalence() {
  Tally t;
  std::mt19937_64 rng(20240601);
  const std::vector<std::pair<int, int>> params{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}, {1, 0}, {2, 0}};
  int pairs = 0;
  int feasible = 0;
  for (int trial = 0; trial < 640; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int m = std::min(14, n - 1 + static_cast<int>(rng() % 10));
    const auto g = testing::random_graph(rng, n, m, 3, 1, 0.4);
    const auto [p, q] = params[static_cast<std::size_t>(trial) % params.size()];
    const FgcInstance inst{g, p, q};
    const EdgeSet f = random_subset(rng, g.edge_count(), 55 + static_cast<int>(rng() % 45));
    const bool truth = brute_force_feasible(inst, f);
    const std::string tag = "trial " + std::to_string(trial);
    t.check(check_pq(inst, f) == truth, tag + " check_pq");
    t.check(check_fgc(inst, f) == truth, tag + " check_fgc");
    if (p == 1 && q >= 1) t.check(check_1k(inst, f) == truth, tag + " check_1k");
    if (q == 1) t.check(check_k1(inst, f) == truth, tag + " check_k1");
    ++pairs;
    feasible += truth ? 1 : 0;
  }
  return t.outcome(std::to_string(pairs) + " pairs (" + std::to_string(feasible) + " feasible)");
}

Outcome arborescence_exactness() {
  Tally t;
  std::mt19937_64 rng(77);
  int exhaustive = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int k = 1 + trial % 2;
    const int n = 2 + static_cast<int>(rng() % 4);
    const int arcs = 3 + static_cast<int>(rng() % 8);
    const auto d = testing::random_digraph(rng, n, arcs, 6);
    const auto expected = testing::brute_arborescence(d, 0, k);
    const std::string tag = "digraph " + std::to_string(trial);
    for (const auto method : {ArborescenceMethod::Automatic, ArborescenceMethod::CutLp}) {
      try {
        const auto got = min_cost_k_arborescence(d, 0, k, method);
        t.check(expected && got.cost == *expected, tag + " cost mismatch");
        t.check(is_k_arborescence(d, got), tag + " not a k-arborescence");
      } catch (const ArborescenceError&) {
        t.check(!expected, tag + " reported infeasible");
      }
    }
    infeasible += expected ? 0 : 1;
    ++exhaustive;
  }
  // Every simple digraph on 3 or 4 vertices with at most 10 arcs, random costs.
  int simple = 0;
  for (int n = 3; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v) pairs.emplace_back(u, v);
      }
    }
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << pairs.size()); ++pattern) {
      if (std::popcount(pattern) > 10) continue;
      Digraph d;
      d.vertex_count = n;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((pattern >> i) & 1U) d.arcs.push_back({pairs[i].first, pairs[i].second, Rational(static_cast<std::int64_t>(rng() % 5)), -1});
      }
      for (int k = 1; k <= 2; ++k) {
        const auto expected = testing::brute_arborescence(d, 0, k);
        const std::string tag = "simple n=" + std::to_string(n) + " pattern " + std::to_string(pattern);
        try {
          const auto got = min_cost_k_arborescence(d, 0, k);
          t.check(expected && got.cost == *expected, tag + " cost mismatch");
        } catch (const ArborescenceError&) {
          t.check(!expected, tag + " reported infeasible");
        }
        ++simple;
      }
    }
  }
  int classical = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    auto d = testing::random_digraph(rng, n, n + static_cast<int>(rng() % (3 * n)), 9);
    for (int v = 1; v < n; ++v) d.arcs.push_back({0, v, Rational(20), -1});
    const auto a = min_cost_k_arborescence(d, 0, 1, ArborescenceMethod::CutLp);
    const auto b = min_cost_k_arborescence(d, 0, 1, ArborescenceMethod::Contraction);
    t.check(a.cost == b.cost, "classical comparison " + std::to_string(trial));
    ++classical;
  }
  return t.outcome(std::to_string(exhaustive) + " random multidigraphs (" + std::to_string(infeasible) +
                   " infeasible), " + std::to_string(simple) + " simple digraph runs, " + std::to_string(classical) +
                   " classical comparisons");
}

Outcome ratio_certification() {
  Tally t;
  std::mt19937_64 rng(4242);
  struct Config {
    std::string name;
    int k;
  };
  std::vector<Config> configs;
  for (int k = 1; k <= 3; ++k) configs.push_back({"1k", k});
  for (int k = 1; k <= 4; ++k) configs.push_back({"capk", k});
  for (int k = 1; k <= 3; ++k) configs.push_back({"k1", k});
  const int per_config = 24;
  int solved = 0;
  Rational worst;
  for (const auto& c : configs) {
    int done = 0;
    for (int attempt = 0; attempt < 400 && done < per_config; ++attempt) {
      const int n = 3 + static_cast<int>(rng() % 6);
      const int m = std::min(14, n + 2 + static_cast<int>(rng() % 9));
      const std::int64_t cap_max = c.name == "capk" ? 3 : 1;
      const auto g = testing::random_graph(rng, n, m, 7, cap_max);
      const std::string tag = c.name + " k=" + std::to_string(c.k);
      SolveReport report;
      OracleResult opt;
      bool ok = false;
      if (c.name == "capk") {
        const CapEcssInstance inst{g, c.k};
        if (!check_cap_kecss(inst, all_edges(g))) continue;
        opt = brute_force_opt(inst);
        report = solve_cap_kecss(inst);
        ok = check_cap_kecss(inst, report.solution);
        t.check(report.guarantee == Rational(std::min<std::int64_t>(c.k, 2 * capacity_range(inst).first)),
                tag + " guarantee");
      } else if (c.name == "1k") {
        const FgcInstance inst{g, 1, c.k};
        if (!check_1k(inst, all_edges(g))) continue;
        opt = brute_force_opt(inst);
        report = solve_1k(inst);
        ok = check_1k(inst, report.solution) && brute_force_feasible(inst, report.solution);
        t.check(report.guarantee == Rational(c.k + 1), tag + " guarantee");
      } else {
        const FgcInstance inst{g, c.k, 1};
        if (!check_k1(inst, all_edges(g))) continue;
        opt = brute_force_opt(inst);
        report = solve_k1(inst);
        ok = check_k1(inst, report.solution) && brute_force_feasible(inst, report.solution);
        t.check(report.guarantee == Rational(4), tag + " guarantee");
        // Each stage separately stays within 2 OPT.
        t.check(report.stage_costs.size() == 2 && report.stage_costs[0] <= Rational(2) * *opt.optimum &&
                    report.stage_costs[1] <= Rational(2) * *opt.optimum,
                tag + " stage cost above 2 OPT");
      }
      t.check(ok, tag + " output failed its checker");
      t.check(opt.feasible(), tag + " oracle says infeasible");
      if (!opt.feasible()) continue;
      t.check(report.cost <= report.guarantee * *opt.optimum, tag + " ratio above guarantee");
      t.check(!report.lower_bound || *report.lower_bound <= *opt.optimum, tag + " lower bound above OPT");
      if (opt.optimum->sign() > 0) {
        const Rational ratio = report.cost / *opt.optimum;
        if (ratio > worst) worst = ratio;
      }
      ++done;
      ++solved;
    }
    t.check(done == per_config, c.name + " k=" + std::to_string(c.k) + " found too few feasible instances");
  }
  return t.outcome(std::to_string(solved) + " oracle-solved instances, worst ratio " + str(worst));
}

Outcome pq_solver() {
  Tally t;
  std::mt19937_64 rng(99);
  int instances = 0;
  int rounds = 0;
  for (const auto& [p, q] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}}) {
    int done = 0;
    for (int attempt = 0; attempt < 2000 && done < 80; ++attempt) {
      const int n = 3 + static_cast<int>(rng() % 4);
      const int m = std::min(14, 2 * n + static_cast<int>(rng() % 6));
      const auto g = testing::random_graph(rng, n, m, 5, 1, 0.35);
      const FgcInstance inst{g, p, q};
      if (!check_pq(inst, all_edges(g))) continue;
      const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ") attempt " + std::to_string(attempt);
      const auto report = solve_pq(inst);
      t.check(check_pq(inst, report.solution), tag + " output infeasible");
      t.check(brute_force_feasible(inst, report.solution), tag + " output fails the definition");
      t.check(report.iterations <= q, tag + " too many iterations");
      for (const auto& round : report.rounds) {
        const auto opt = brute_force_min_hitting_set(round.problem);
        t.check(opt.feasible(), tag + " hitting set infeasible");
        if (!opt.feasible()) continue;
        const auto bound = harmonic(static_cast<std::int64_t>(round.problem.sets.size())) * *opt.optimum;
        t.check(round.cost == hitting_set_cost(round.problem, round.chosen), tag + " round cost");
        t.check(round.cost <= bound, tag + " greedy above H(|C|) OPT");
        ++rounds;
      }
      ++done;
      ++instances;
    }
    t.check(done == 80, "too few feasible instances for q=" + std::to_string(q));
  }
  t.check(rounds > 0, "no augmentation round ran");
  return t.outcome(std::to_string(instances) + " instances, " + std::to_string(rounds) + " hitting-set rounds");
}

Outcome primal_dual_certificates() {
  Tally t;
  // Hand fixtures. Vertex v_i is numbered i-1.
  {
    const auto g = build_graph(3, {{0, 1, 1}, {0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    const EdgeSet f1 = all_edges(g);
    const auto f = build_requirement(k_edge_cut_collection(g, f1, 2), f1, g);
    t.check(!f.evaluate(VertexSet::of({0})), "non-maximal fixture f({v1}) != 0");
    t.check(!f.evaluate(VertexSet::of({1})), "non-maximal fixture f({v2}) != 0");
    t.check(f.evaluate(VertexSet::of({0, 1})), "non-maximal fixture f({v1,v2}) != 1");
    t.check(is_uncrossable_bruteforce(f), "non-maximal fixture not uncrossable");
  }
  {
    const auto g = build_graph(4, {{1, 2, 1, Label::Unsafe},
                                   {0, 1, 1, Label::Safe},
                                   {0, 1, 1, Label::Safe},
                                   {2, 3, 1, Label::Safe},
                                   {2, 3, 1, Label::Safe},
                                   {3, 0, 1, Label::Safe}});
    const EdgeSet f1 = all_edges(g);
    const auto f = build_requirement(k_edge_cut_collection(g, f1, 2), f1, g);
    t.check(f.evaluate(VertexSet::of({0, 1})), "mixed-square fixture f({v1,v2}) != 1");
    t.check(!f.evaluate(VertexSet::of({1, 2})), "mixed-square fixture f({v2,v3}) != 0");
    t.check(is_uncrossable_bruteforce(f), "mixed-square fixture not uncrossable");
  }

  std::mt19937_64 rng(31337);
  int runs = 0;
  int nonzero = 0;
  for (int trial = 0; trial < 900 && runs < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto g = testing::random_graph(rng, n, std::min(16, n * (k + 1) + static_cast<int>(rng() % 4)), 6, 1, 0.5);
    const FgcInstance inst{g, k, 1};
    if (!check_k1(inst, all_edges(g))) continue;
    const auto report = solve_k1(inst);
    const auto& tr = *report.k1;
    const auto& pd = tr.augmentation;
    const std::string tag = "run " + std::to_string(runs);
    t.check(total_cost(g, pd.augmentation) <= Rational(2) * pd.dual.total, tag + " c(F2) > 2 dual");
    t.check(dual_feasible(g, tr.candidates, pd.dual), tag + " dual infeasible");
    t.check(covers_requirement(tr.requirement, g, pd.augmentation), tag + " requirement uncovered");
    for (EdgeId id : pd.augmentation) {
      t.check(!covers_requirement(tr.requirement, g, set_difference(pd.augmentation, {id})),
              tag + " reverse delete left a redundant edge");
    }
    t.check(is_uncrossable_bruteforce(tr.requirement), tag + " requirement not uncrossable");
    nonzero += tr.requirement.identically_zero() ? 0 : 1;
    ++runs;
  }
  t.check(runs == 200, "too few stage-two runs");
  return t.outcome("hand fixtures + " + std::to_string(runs) + " stage-two runs (" + std::to_string(nonzero) +
                   " with f != 0)");
}

Outcome cut_enumeration() {
  Tally t;
  std::mt19937_64 rng(555);
  std::size_t largest = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int m = n - 1 + static_cast<int>(rng() % (2 * n));
    const auto g = testing::random_graph(rng, n, m, 1);
    EdgeWeights w;
    for (int i = 0; i < g.edge_count(); ++i) w.push_back(Rational(1 + static_cast<std::int64_t>(rng() % 3)));
    const Rational lambda = testing::brute_min_cut(g, w);
    for (const int alpha : {1, 2}) {
      const auto got = enumerate_near_min_cuts(g, w, Rational(alpha));
      std::vector<std::uint64_t> masks;
      for (const auto& c : got.cuts) masks.push_back(c.members().bits());
      std::sort(masks.begin(), masks.end());
      const auto expected = testing::brute_cuts(g, w, Rational(alpha) * lambda);
      const std::string tag = "graph " + std::to_string(trial) + " alpha=" + std::to_string(alpha);
      t.check(masks == expected, tag + " differs from exhaustive enumeration");
      t.check(got.reference_value == lambda, tag + " wrong lambda");
      if (alpha == 2) {
        const auto n4 = static_cast<std::size_t>(n) * n * n * n;
        t.check(got.cuts.size() <= n4, tag + " more than n^4 cuts");
        largest = std::max(largest, got.cuts.size());
      }
    }
  }
  return t.outcome("100 graphs, largest 2-approximate family " + std::to_string(largest));
}

Outcome joins_and_candidates() {
  Tally t;
  // Exhaustive join sizes: one pass over all edge subsets gives the optimum
  // for every W at once.
  std::mt19937_64 rng(8080);
  int graphs = 0;
  long joins = 0;
  const auto check_all_w = [&](const MultiGraph& g, const std::string& tag) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<int> best(std::size_t{1} << n, -1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::uint64_t odd = 0;
      for (int i = 0; i < m; ++i) {
        if ((mask >> i) & 1U) odd ^= (std::uint64_t{1} << g.edge(i).u) ^ (std::uint64_t{1} << g.edge(i).v);
      }
      const int size = std::popcount(mask);
      if (best[odd] < 0 || size < best[odd]) best[odd] = size;
    }
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      if (std::popcount(w) % 2 != 0) continue;
      try {
        const auto j = min_cardinality_wjoin(g, VertexSet(w));
        t.check(best[w] == static_cast<int>(j.size()), tag + " join not minimum");
        t.check(odd_degree_set(g, j) == VertexSet(w), tag + " join has wrong parity");
      } catch (const GraphError&) {
        t.check(best[w] < 0, tag + " join reported missing");
      }
      ++joins;
    }
  };
  // Every simple graph on four vertices.
  for (std::uint64_t pattern = 0; pattern < 64; ++pattern) {
    std::vector<EdgeSpec> specs;
    int bit = 0;
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v, ++bit) {
        if ((pattern >> bit) & 1U) specs.push_back({u, v, 1});
      }
    }
    check_all_w(build_graph(4, specs), "K4 pattern " + std::to_string(pattern));
    ++graphs;
  }
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int m = std::min(16, n - 1 + static_cast<int>(rng() % 12));
    check_all_w(testing::random_graph(rng, n, m, 1), "random graph " + std::to_string(trial));
    ++graphs;
  }

  // Candidate bounds against the oracle optimum on unweighted (1,1) instances.
  const Rational alpha = SolverConfig{}.two_ecss_factor;
  int instances = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int m = std::min(14, n + 1 + static_cast<int>(rng() % 8));
    const auto g = testing::random_graph(rng, n, m, 1, 1, 0.3 + 0.1 * static_cast<double>(rng() % 5));
    const FgcInstance inst{g, 1, 1};
    const auto opt = brute_force_opt(inst);
    const std::string tag = "instance " + std::to_string(trial);
    t.check(opt.feasible(), tag + " infeasible after bridge repair");
    if (!opt.feasible()) continue;
    const auto report = solve_unweighted_fgc(inst);
    const auto& tr = *report.unweighted;
    const int opt_safe = count_label(g, opt.witness, Label::Safe);
    const int opt_unsafe = count_label(g, opt.witness, Label::Unsafe);
    t.check(Rational(2 * static_cast<std::int64_t>(tr.join.size())) <= Rational(opt_unsafe), tag + " |J'| > |F* u|/2");
    t.check(Rational(static_cast<std::int64_t>(tr.ecss_candidate.size())) <=
                Rational(2) * alpha * Rational(opt_safe) + alpha * Rational(opt_unsafe),
            tag + " 2-ECSS candidate above bound");
    t.check(check_1k(inst, report.solution), tag + " output infeasible");
    t.check(report.cost <= report.guarantee * *opt.optimum, tag + " ratio above guarantee");
    ++instances;
  }
  return t.outcome(std::to_string(graphs) + " graphs / " + std::to_string(joins) + " joins, " +
                   std::to_string(instances) + " unweighted FGC instances");
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "Figure-1 family", figure_one},
      {2, "checker equivalence", checker_equivalence},
      {3, "arborescence exactness", arborescence_exactness},
      {4, "ratio certification", ratio_certification},
      {5, "(p,q) solver", pq_solver},
      {6, "primal-dual certificates", primal_dual_certificates},
      {7, "cut enumeration completeness", cut_enumeration},
      {8, "W-join optimality and candidate bounds", joins_and_candidates},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name,
                outcome.detail.c_str(), seconds);
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}
