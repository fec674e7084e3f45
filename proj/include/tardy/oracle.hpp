#pragma once

#include "tardy/solution.hpp"

namespace tardy {

inline constexpr int kDefaultOracleCap = 22;

// Ground truth by exhaustive enumeration of all 2^n early sets. Ties are
// broken towards the numerically smallest early-set bitmask (bit j = job j).
// Throws TooLargeError when n exceeds `max_jobs`.
OptimalSolution solve_bruteforce(const Instance& instance, int max_jobs = kDefaultOracleCap);

}  // namespace tardy
