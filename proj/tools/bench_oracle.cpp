// Serial vs OpenMP timings of the exact oracle kernels.

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "fgc/io.hpp"
#include "fgc/oracle.hpp"

namespace {

using namespace fgc;
using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool same(const OracleResult& a, const OracleResult& b) {
  return a.optimum == b.optimum && a.witness == b.witness;
}

template <typename Inst>
void row(const char* name, const Inst& instance) {
  OracleResult serial;
  OracleResult parallel;
  const double ts = time_ms([&] { serial = brute_force_opt_serial(instance); });
  const double tp = time_ms([&] { parallel = brute_force_opt(instance); });
  std::printf("%-28s %3d %3d %12.2f %12.2f %8.2f  %s\n", name, instance.graph.vertex_count(),
              instance.graph.edge_count(), ts, tp, tp > 0 ? ts / tp : 0.0, same(serial, parallel) ? "ok" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", omp_get_max_threads());
  std::printf("%-28s %3s %3s %12s %12s %8s\n", "instance", "n", "m", "serial_ms", "parallel_ms", "speedup");

  for (int n = 3; n <= 6; ++n) {
    const std::string name = "figure1 n=" + std::to_string(n);
    row(name.c_str(), gen_figure1(n));
  }
  for (int i = 0; i < 4; ++i) {
    RandomGraphOptions options;
    options.n = 8;
    options.m = 16 + i;
    options.cost_max = 9;
    options.capacity_max = 3;
    options.seed = 1000 + static_cast<std::uint64_t>(i);
    const MultiGraph graph = gen_random(options);
    row(("random (1,2) m=" + std::to_string(options.m)).c_str(), FgcInstance{graph, 1, 2});
    row(("random (2,2) m=" + std::to_string(options.m)).c_str(), FgcInstance{graph, 2, 2});
    row(("random capk k=3 m=" + std::to_string(options.m)).c_str(), CapEcssInstance{graph, 3});
  }

  std::mt19937_64 rng(7);
  HittingSetProblem problem;
  for (int x = 0; x < 20; ++x) problem.cost.emplace_back(std::uniform_int_distribution<int>(1, 9)(rng));
  for (int s = 0; s < 30; ++s) {
    std::vector<int> set;
    for (int x = 0; x < 20; ++x) {
      if (std::bernoulli_distribution(0.15)(rng)) set.push_back(x);
    }
    if (set.empty()) set.push_back(s % 20);
    problem.sets.push_back(set);
  }
  OracleResult serial;
  OracleResult parallel;
  const double ts = time_ms([&] { serial = brute_force_min_hitting_set_serial(problem); });
  const double tp = time_ms([&] { parallel = brute_force_min_hitting_set(problem); });
  std::printf("%-28s %3s %3d %12.2f %12.2f %8.2f  %s\n", "hitting set 20x30", "-", 20, ts, tp, tp > 0 ? ts / tp : 0.0,
              same(serial, parallel) ? "ok" : "MISMATCH");
  return 0;
}
