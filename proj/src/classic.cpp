#include "tardy/classic.hpp"

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

namespace tardy {

OptimalSolution solve_moore(const Instance& instance) {
    const int n = instance.n();
    for (const Job& job : instance.jobs()) {
        if (job.w != instance.job(0).w) {
            throw NonUniformWeightsError("moore requires all weights equal");
        }
    }

    std::priority_queue<std::pair<Value, int>> taken;  // (p, id), longest on top
    std::vector<char> ejected(static_cast<std::size_t>(n), 0);
    Value t = 0;
    for (int id : edd_order(instance)) {
        const Job& job = instance.job(id);
        taken.push({job.p, id});
        t += job.p;
        if (t > job.d) {
            const auto [p_max, id_max] = taken.top();
            taken.pop();
            ejected[static_cast<std::size_t>(id_max)] = 1;
            t -= p_max;
        }
    }

    std::vector<int> early;
    for (int id = 0; id < n; ++id) {
        if (!ejected[static_cast<std::size_t>(id)]) early.push_back(id);
    }
    auto schedule = evaluate_early_set(instance, early);
    if (!schedule) throw FormulationBugError("moore produced an infeasible early set");
    return OptimalSolution{schedule->objective, std::move(*schedule), "moore"};
}

OptimalSolution solve_lawler_moore(const Instance& instance, Value processing_budget) {
    const int n = instance.n();
    __int128 horizon_wide = 0;
    for (const Job& job : instance.jobs()) horizon_wide += job.p;
    if (horizon_wide > processing_budget) {
        throw BudgetExceededError("lawler-moore: total processing time exceeds the budget");
    }
    const Value horizon = static_cast<Value>(horizon_wide);
    // Backtracking bit rows cost n*(horizon+1) bits; refuse unreasonable tables.
    if (static_cast<__int128>(n) * (horizon + 1) > (__int128{1} << 33)) {
        throw BudgetExceededError("lawler-moore: backtracking table would exceed 1 GiB");
    }

    constexpr Value kUnreachable = -1;
    std::vector<Value> best(static_cast<std::size_t>(horizon) + 1, kUnreachable);
    best[0] = 0;
    const std::vector<int> order = edd_order(instance);
    std::vector<std::vector<bool>> taken(static_cast<std::size_t>(n));

    Value prefix_p = 0;
    for (int pos = 0; pos < n; ++pos) {
        const Job& job = instance.job(order[static_cast<std::size_t>(pos)]);
        prefix_p += job.p;
        auto& row = taken[static_cast<std::size_t>(pos)];
        row.assign(static_cast<std::size_t>(horizon) + 1, false);
        // Job completes at t when early, so only t <= d is admissible.
        const Value t_cap = std::min(job.d, prefix_p);
        for (Value t = t_cap; t >= job.p; --t) {
            const Value from = best[static_cast<std::size_t>(t - job.p)];
            if (from == kUnreachable) continue;
            if (from + job.w > best[static_cast<std::size_t>(t)]) {
                best[static_cast<std::size_t>(t)] = from + job.w;
                row[static_cast<std::size_t>(t)] = true;
            }
        }
    }

    Value best_t = 0;
    Value best_weight = 0;
    for (Value t = 0; t <= horizon; ++t) {
        if (best[static_cast<std::size_t>(t)] > best_weight) {
            best_weight = best[static_cast<std::size_t>(t)];
            best_t = t;
        }
    }

    std::vector<int> early;
    Value t = best_t;
    for (int pos = n - 1; pos >= 0; --pos) {
        if (taken[static_cast<std::size_t>(pos)][static_cast<std::size_t>(t)]) {
            const int id = order[static_cast<std::size_t>(pos)];
            early.push_back(id);
            t -= instance.job(id).p;
        }
    }
    std::sort(early.begin(), early.end());

    auto schedule = evaluate_early_set(instance, early);
    if (!schedule || schedule->objective != total_weight(instance) - best_weight) {
        throw FormulationBugError("lawler-moore reconstruction does not replay");
    }
    return OptimalSolution{schedule->objective, std::move(*schedule), "lawler-moore"};
}

}  // namespace tardy
