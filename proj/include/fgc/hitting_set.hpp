#pragma once

#include <vector>

#include "fgc/rational.hpp"

namespace fgc {

/// Elements are 0..cost.size()-1; each set lists element indices.
struct HittingSetProblem {
  std::vector<Rational> cost;
  std::vector<std::vector<int>> sets;
};

/// Repeatedly takes the element with the smallest cost per newly hit set
/// (ties by index). Throws InfeasibleInstance("infeasible hitting set") when
/// some set is empty. Returns sorted element indices.
std::vector<int> greedy_hitting_set(const HittingSetProblem& problem);

bool is_hitting_set(const HittingSetProblem& problem, const std::vector<int>& chosen);
Rational hitting_set_cost(const HittingSetProblem& problem, const std::vector<int>& chosen);

}  // namespace fgc
