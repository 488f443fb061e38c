#include "fgc/hitting_set.hpp"

#include <algorithm>
#include <optional>

#include "fgc/instance.hpp"

namespace fgc {

std::vector<int> greedy_hitting_set(const HittingSetProblem& problem) {
  const int elements = static_cast<int>(problem.cost.size());
  for (const auto& set : problem.sets) {
    if (set.empty()) throw InfeasibleInstance("infeasible hitting set");
    for (int x : set) {
      if (x < 0 || x >= elements) throw std::out_of_range("hitting set element out of range");
    }
  }
  std::vector<char> hit(problem.sets.size(), 0);
  std::vector<char> taken(static_cast<std::size_t>(elements), 0);
  std::size_t remaining = problem.sets.size();
  std::vector<int> chosen;
  while (remaining > 0) {
    std::vector<int> gain(static_cast<std::size_t>(elements), 0);
    for (std::size_t s = 0; s < problem.sets.size(); ++s) {
      if (hit[s]) continue;
      for (int x : problem.sets[s]) ++gain[x];
    }
    int best = -1;
    std::optional<Rational> best_ratio;
    for (int x = 0; x < elements; ++x) {
      if (taken[x] || gain[x] == 0) continue;
      Rational ratio = problem.cost[x] / Rational(gain[x]);
      if (!best_ratio || ratio < *best_ratio) {
        best_ratio = std::move(ratio);
        best = x;
      }
    }
    taken[best] = 1;
    chosen.push_back(best);
    for (std::size_t s = 0; s < problem.sets.size(); ++s) {
      if (hit[s]) continue;
      if (std::find(problem.sets[s].begin(), problem.sets[s].end(), best) != problem.sets[s].end()) {
        hit[s] = 1;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool is_hitting_set(const HittingSetProblem& problem, const std::vector<int>& chosen) {
  return std::all_of(problem.sets.begin(), problem.sets.end(), [&](const std::vector<int>& set) {
    return std::any_of(set.begin(), set.end(),
                       [&](int x) { return std::find(chosen.begin(), chosen.end(), x) != chosen.end(); });
  });
}

Rational hitting_set_cost(const HittingSetProblem& problem, const std::vector<int>& chosen) {
  Rational total;
  for (int x : chosen) total += problem.cost.at(static_cast<std::size_t>(x));
  return total;
}

}  // namespace fgc
