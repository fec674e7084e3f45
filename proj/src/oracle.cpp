#include "tardy/oracle.hpp"

#include <string>

namespace tardy {

OptimalSolution solve_bruteforce(const Instance& instance, int max_jobs) {
    const int n = instance.n();
    if (n > max_jobs || n > 62) {
        throw TooLargeError("brute force capped at " + std::to_string(max_jobs) + " jobs, got " +
                            std::to_string(n));
    }

    const std::vector<int> order = edd_order(instance);
    const Value all_tardy = total_weight(instance);

    // The empty early set (mask 0) is always feasible.
    unsigned long long best_mask = 0;
    Value best_objective = all_tardy;

    const unsigned long long mask_end = 1ull << n;
    for (unsigned long long mask = 1; mask < mask_end; ++mask) {
        Value t = 0;
        Value early_weight = 0;
        bool feasible = true;
        for (int id : order) {
            if (!(mask >> id & 1ull)) continue;
            const Job& job = instance.job(id);
            t += job.p;
            if (t > job.d) {
                feasible = false;
                break;
            }
            early_weight += job.w;
        }
        if (feasible && all_tardy - early_weight < best_objective) {
            best_objective = all_tardy - early_weight;
            best_mask = mask;
        }
    }

    std::vector<int> early;
    for (int id = 0; id < n; ++id) {
        if (best_mask >> id & 1ull) early.push_back(id);
    }
    auto schedule = evaluate_early_set(instance, early);
    if (!schedule || schedule->objective != best_objective) {
        throw FormulationBugError("brute force witness does not replay");
    }
    return OptimalSolution{best_objective, std::move(*schedule), "oracle"};
}

}  // namespace tardy
