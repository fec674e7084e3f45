#pragma once

#include "tardy/solution.hpp"

namespace tardy {

// Moore-Hodgson for uniform weights: walk jobs in EDD order and, whenever a
// due date is violated, eject the longest job taken so far. O(n lg n).
// Throws NonUniformWeightsError when weights differ.
OptimalSolution solve_moore(const Instance& instance);

inline constexpr Value kDefaultProcessingBudget = 10'000'000;

// Pseudo-polynomial DP over early-set processing time: F[t] is the maximum
// early weight with the early jobs occupying exactly t time units. Throws
// BudgetExceededError when the sum of processing times (or the backtracking
// table) exceeds the budget.
OptimalSolution solve_lawler_moore(const Instance& instance,
                                   Value processing_budget = kDefaultProcessingBudget);

}  // namespace tardy
