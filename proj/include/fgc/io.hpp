#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "fgc/instance.hpp"
#include "fgc/solvers.hpp"

namespace fgc {

using Instance = std::variant<FgcInstance, CapEcssInstance>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line) : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// Text format:
///
///   fgc 1             |  capk 1
///   n <vertices>      |  n <vertices>
///   p <p> q <q>       |  k <k>
///   edge u v cost S|U |  edge u v cost capacity
///
/// '#' starts a comment; blank lines are ignored. Costs are integers,
/// decimals or a/b.
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);
std::string serialize_instance(const Instance& instance);

/// One edge id per line.
EdgeSet parse_solution(std::string_view text, int edge_count);
std::string serialize_solution(const EdgeSet& solution);

/// 2n vertices on an unsafe Hamiltonian cycle (ids 0..2n-1) plus n-1 safe
/// spokes v_{2i} v_{2n}; all costs 1. Vertex v_i is numbered i-1.
FgcInstance gen_figure1(int n);

struct RandomGraphOptions {
  int n = 6;
  int m = 10;
  double safe_probability = 0.5;
  std::int64_t cost_min = 1;
  std::int64_t cost_max = 1;
  std::int64_t capacity_min = 1;
  std::int64_t capacity_max = 1;
  std::uint64_t seed = 0;
  /// Relabel every unsafe bridge as safe so (1,q) instances are feasible.
  bool repair_unsafe_bridges = true;
};

/// Connected random multigraph: a random spanning tree plus m-n+1 further
/// edges. Deterministic in the seed.
MultiGraph gen_random(const RandomGraphOptions& options);

/// FNV-1a 64-bit hash of the canonical serialization.
std::uint64_t instance_digest(const Instance& instance);

struct RunReport {
  std::string instance_digest;
  std::string algorithm;
  Rational cost;
  Rational guarantee;
  std::optional<Rational> lower_bound;
  /// cost / lower_bound when the bound is positive.
  std::optional<Rational> ratio;
  int iterations = 0;
  double elapsed_ms = 0;
  EdgeSet solution;
  std::vector<Rational> stage_costs;
};

RunReport make_run_report(const Instance& instance, const std::string& algorithm, const SolveReport& report,
                          double elapsed_ms);

/// JSON object with the RunReport fields. Rationals are written as strings.
std::string to_json(const RunReport& report, bool include_elapsed = true);

}  // namespace fgc
