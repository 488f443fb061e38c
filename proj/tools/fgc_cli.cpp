// Command-line front end: instance generation, checking, solving, the exact
// oracle, cut enumeration and a small ratio benchmark.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fgc/checkers.hpp"
#include "fgc/cuts.hpp"
#include "fgc/io.hpp"
#include "fgc/oracle.hpp"
#include "fgc/solvers.hpp"

namespace {

using namespace fgc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

const FgcInstance& need_fgc(const Instance& instance) {
  if (const auto* f = std::get_if<FgcInstance>(&instance)) return *f;
  throw UsageError("this command needs an fgc instance");
}

const MultiGraph& graph_of(const Instance& instance) {
  return std::visit([](const auto& x) -> const MultiGraph& { return x.graph; }, instance);
}

SolveReport run_algorithm(const std::string& algorithm, const Instance& instance, const SolverConfig& config) {
  if (algorithm == "capk") {
    if (const auto* c = std::get_if<CapEcssInstance>(&instance)) return solve_cap_kecss(*c);
    throw UsageError("capk needs a capk instance");
  }
  const FgcInstance& f = need_fgc(instance);
  if (algorithm == "1k") return solve_1k(f, config);
  if (algorithm == "k1") return solve_k1(f, config);
  if (algorithm == "pq") return solve_pq(f, config);
  if (algorithm == "unweighted-fgc") return solve_unweighted_fgc(f, config);
  if (algorithm == "unweighted-k1") return solve_unweighted_k1(f, config);
  throw UsageError("unknown algorithm " + algorithm);
}

bool feasible_for(const Instance& instance, const EdgeSet& solution) {
  if (const auto* c = std::get_if<CapEcssInstance>(&instance)) return check_cap_kecss(*c, solution);
  return check_fgc(std::get<FgcInstance>(instance), solution);
}

OracleResult oracle_for(const Instance& instance) {
  return std::visit([](const auto& x) { return brute_force_opt(x); }, instance);
}

// ---------------------------------------------------------------------------

struct BenchRow {
  std::string family;
  std::string algorithm;
  int n = 0;
  int m = 0;
  Rational cost;
  Rational optimum;
  Rational guarantee;
  bool feasible = false;
};

struct BenchCase {
  std::string family;
  Instance instance;
  std::vector<std::string> algorithms;
};

std::vector<BenchCase> bench_cases(const std::string& family, int max_n, int count, std::uint64_t seed) {
  std::vector<BenchCase> cases;
  if (family == "figure1") {
    for (int n = 2; n <= max_n; ++n) {
      cases.push_back({"figure1", gen_figure1(n), {"unweighted-fgc", "1k", "forest-first"}});
    }
    return cases;
  }
  if (family != "random") throw UsageError("unknown family " + family);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    RandomGraphOptions options;
    options.n = std::uniform_int_distribution<int>(3, std::max(3, max_n))(rng);
    options.m = std::uniform_int_distribution<int>(options.n + 1, std::max(options.n + 1, 14))(rng);
    options.cost_min = 1;
    options.cost_max = 6;
    options.capacity_max = 3;
    options.seed = rng();
    const MultiGraph graph = gen_random(options);
    cases.push_back({"random", FgcInstance{graph, 1, 1}, {"1k", "unweighted-fgc"}});
    cases.push_back({"random", FgcInstance{graph, 2, 1}, {"k1"}});
    cases.push_back({"random", CapEcssInstance{graph, 2}, {"capk"}});
  }
  return cases;
}

int run_bench(const std::string& family, int max_n, int count, std::uint64_t seed) {
  const auto cases = bench_cases(family, max_n, count, seed);
  std::vector<BenchRow> rows;
  SolverConfig config;
  for (const auto& c : cases) {
    const MultiGraph& graph = graph_of(c.instance);
    if (graph.edge_count() > kMaxOracleEdges) continue;
    const OracleResult opt = oracle_for(c.instance);
    if (!opt.feasible()) continue;
    for (const auto& algorithm : c.algorithms) {
      bool unit = true;
      for (const auto& e : graph.edges()) unit = unit && e.cost == Rational(1);
      if (algorithm.rfind("unweighted", 0) == 0 && !unit) continue;
      BenchRow row{c.family, algorithm, graph.vertex_count(), graph.edge_count(), {}, *opt.optimum, {}, false};
      try {
        if (algorithm == "forest-first") {
          const EdgeSet f = forest_first_baseline(std::get<FgcInstance>(c.instance));
          row.cost = total_cost(graph, f);
          row.guarantee = Rational(0);
          row.feasible = feasible_for(c.instance, f);
        } else {
          const SolveReport r = run_algorithm(algorithm, c.instance, config);
          row.cost = r.cost;
          row.guarantee = r.guarantee;
          row.feasible = feasible_for(c.instance, r.solution);
        }
      } catch (const InfeasibleInstance&) {
        continue;
      }
      rows.push_back(row);
    }
  }

  std::cout << std::left << std::setw(9) << "family" << std::setw(16) << "algorithm" << std::setw(4) << "n"
            << std::setw(4) << "m" << std::setw(8) << "cost" << std::setw(8) << "opt" << std::setw(10) << "ratio"
            << std::setw(10) << "bound" << "feasible\n";
  std::map<std::string, std::tuple<int, double, double, int>> summary;  // count, max, sum, violations
  for (const auto& row : rows) {
    const double ratio = row.optimum.is_zero() ? 1.0 : (row.cost / row.optimum).to_double();
    const bool within = row.guarantee.is_zero() || row.optimum.is_zero() || row.cost <= row.guarantee * row.optimum;
    std::cout << std::setw(9) << row.family << std::setw(16) << row.algorithm << std::setw(4) << row.n
              << std::setw(4) << row.m << std::setw(8) << row.cost.to_string() << std::setw(8)
              << row.optimum.to_string() << std::setw(10) << std::setprecision(4) << ratio << std::setw(10)
              << (row.guarantee.is_zero() ? std::string("-") : row.guarantee.to_string())
              << (row.feasible ? "yes" : "NO") << '\n';
    auto& [n, max, sum, bad] = summary[row.algorithm];
    ++n;
    max = std::max(max, ratio);
    sum += ratio;
    if (!within || !row.feasible) ++bad;
  }
  std::cout << "\nalgorithm       runs  max_ratio  mean_ratio  violations\n";
  int violations = 0;
  for (const auto& [algorithm, s] : summary) {
    const auto& [n, max, sum, bad] = s;
    std::cout << std::setw(16) << algorithm << std::setw(6) << n << std::setw(11) << std::setprecision(4) << max
              << std::setw(12) << sum / n << bad << '\n';
    violations += bad;
  }
  return violations == 0 ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flexible graph connectivity solvers"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string solution_path;
  std::string algorithm;
  std::string family = "figure1";
  std::string weights = "unit";
  std::string alpha_text = "1";
  int n = 4;
  int m = 8;
  int p = 1;
  int q = 1;
  int k = 0;
  int max_n = 6;
  int count = 20;
  std::int64_t cost_max = 1;
  std::int64_t cap_max = 1;
  double safe_probability = 0.5;
  std::uint64_t seed = 1;
  bool with_oracle = false;
  std::string two_ecss_factor = "2";
  std::string k_ecss_factor = "2";

  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("--family", family, "figure1 or random")->capture_default_str();
  gen->add_option("--n", n, "Figure-1 parameter or vertex count")->capture_default_str();
  gen->add_option("--m", m, "Edge count (random)")->capture_default_str();
  gen->add_option("--p", p)->capture_default_str();
  gen->add_option("--q", q)->capture_default_str();
  gen->add_option("--k", k, "Write a capk instance with this k");
  gen->add_option("--cost-max", cost_max)->capture_default_str();
  gen->add_option("--cap-max", cap_max)->capture_default_str();
  gen->add_option("--safe-prob", safe_probability)->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--output,-o", output);

  auto* check = app.add_subcommand("check", "Check a solution file");
  check->add_option("--input,-i", input)->required();
  check->add_option("--solution,-s", solution_path)->required();

  auto* solve = app.add_subcommand("solve", "Run an approximation algorithm and print a JSON report");
  solve->add_option("--algorithm,-a", algorithm, "1k|capk|k1|pq|unweighted-fgc|unweighted-k1")->required();
  solve->add_option("--input,-i", input)->required();
  solve->add_option("--solution-out", solution_path, "Also write the solution edge ids here");
  solve->add_flag("--with-oracle", with_oracle, "Use the exact optimum as lower bound");
  solve->add_option("--two-ecss-factor", two_ecss_factor)->capture_default_str();
  solve->add_option("--k-ecss-factor", k_ecss_factor)->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Exact optimum by exhaustive search");
  oracle->add_option("--input,-i", input)->required();

  auto* cuts = app.add_subcommand("enumerate-cuts", "List all cuts within alpha of the minimum");
  cuts->add_option("--input,-i", input)->required();
  cuts->add_option("--alpha", alpha_text)->capture_default_str();
  cuts->add_option("--weights", weights, "unit, cost or capacity")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Approximation ratios against the exact oracle");
  bench->add_option("--family", family, "figure1 or random")->capture_default_str();
  bench->add_option("--max-n", max_n)->capture_default_str();
  bench->add_option("--count", count, "Random graphs to draw")->capture_default_str();
  bench->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      Instance instance;
      if (family == "figure1") {
        instance = gen_figure1(n);
      } else if (family == "random") {
        RandomGraphOptions options;
        options.n = n;
        options.m = m;
        options.cost_max = cost_max;
        options.capacity_max = cap_max;
        options.safe_probability = safe_probability;
        options.seed = seed;
        MultiGraph graph = gen_random(options);
        if (k > 0) {
          instance = CapEcssInstance{std::move(graph), k};
        } else {
          instance = FgcInstance{std::move(graph), p, q};
        }
      } else {
        throw UsageError("unknown family " + family);
      }
      write_output(output, serialize_instance(instance));
      return kExitOk;
    }

    if (*check) {
      const Instance instance = read_instance_file(input);
      const EdgeSet solution = parse_solution(read_file(solution_path), graph_of(instance).edge_count());
      const bool ok = feasible_for(instance, solution);
      std::cout << (ok ? "feasible" : "infeasible") << '\n';
      return ok ? kExitOk : kExitInfeasible;
    }

    if (*solve) {
      const Instance instance = read_instance_file(input);
      SolverConfig config;
      config.two_ecss_factor = Rational::parse(two_ecss_factor);
      config.k_ecss_factor = Rational::parse(k_ecss_factor);
      const auto start = std::chrono::steady_clock::now();
      SolveReport report = run_algorithm(algorithm, instance, config);
      const double elapsed =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (with_oracle) {
        const OracleResult opt = oracle_for(instance);
        if (opt.feasible()) report.lower_bound = *opt.optimum;
      }
      std::cout << to_json(make_run_report(instance, algorithm, report, elapsed)) << '\n';
      if (!solution_path.empty()) write_output(solution_path, serialize_solution(report.solution));
      return kExitOk;
    }

    if (*oracle) {
      const Instance instance = read_instance_file(input);
      const OracleResult opt = oracle_for(instance);
      if (!opt.feasible()) {
        std::cout << "infeasible\n";
        return kExitInfeasible;
      }
      std::cout << "optimum " << opt.optimum->to_string() << "\nwitness";
      for (EdgeId id : opt.witness) std::cout << ' ' << id;
      std::cout << "\nexplored " << opt.explored << '\n';
      return kExitOk;
    }

    if (*cuts) {
      const Instance instance = read_instance_file(input);
      const MultiGraph& graph = graph_of(instance);
      EdgeWeights weight;
      for (const auto& e : graph.edges()) {
        if (weights == "unit") {
          weight.emplace_back(1);
        } else if (weights == "cost") {
          weight.push_back(e.cost);
        } else if (weights == "capacity") {
          weight.emplace_back(e.capacity);
        } else {
          throw UsageError("unknown weights " + weights);
        }
      }
      const CutCollection collection = enumerate_near_min_cuts(graph, weight, Rational::parse(alpha_text));
      std::cout << "min " << collection.reference_value.to_string() << " cuts " << collection.cuts.size() << '\n';
      for (const auto& side : collection.cuts) {
        std::cout << cut_weight(graph, weight, side.members()).to_string() << " {";
        bool first = true;
        for (Vertex v : side.members().members()) {
          std::cout << (first ? "" : ",") << v;
          first = false;
        }
        std::cout << "}\n";
      }
      return kExitOk;
    }

    if (*bench) return run_bench(family, max_n, count, seed);
  } catch (const InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
