#pragma once

#include <string>

#include "tardy/schedule.hpp"

namespace tardy {

// Shared return type for every solver. `result` is always a feasible
// schedule witnessing `objective`.
struct OptimalSolution {
    Value objective = 0;
    ScheduleResult result;
    std::string algorithm;
};

}  // namespace tardy
