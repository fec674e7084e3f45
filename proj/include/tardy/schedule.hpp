#pragma once

#include <optional>
#include <vector>

#include "tardy/instance.hpp"

namespace tardy {

// A realized schedule: early jobs run first in EDD order, tardy jobs follow
// in id order. `completion[id]` is the completion time of every job under
// `order`; `objective` is the total weight of the tardy jobs.
struct ScheduleResult {
    std::vector<int> early;       // ascending job ids
    std::vector<int> order;       // full processing sequence
    std::vector<Value> completion;
    Value objective = 0;
};

// Job ids sorted by (due date, id); stable and deterministic.
std::vector<int> edd_order(const Instance& instance);

// Schedules `early` in EDD order from time zero. Returns nullopt when some
// member finishes after its due date (a verdict, not an error); throws Error
// if `early` is not a subset of the job ids.
std::optional<ScheduleResult> evaluate_early_set(const Instance& instance,
                                                 const std::vector<int>& early);

}  // namespace tardy
