#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tardy/errors.hpp"

namespace tardy {

// All job attributes and objectives are 64-bit integers. Instance
// construction checks that sums and products stay below 2^62 so that no
// downstream arithmetic can wrap.
using Value = std::int64_t;

inline constexpr Value kMagnitudeCap = Value{1} << 62;

struct Job {
    int id = 0;
    Value p = 0;  // processing time
    Value d = 0;  // due date
    Value w = 0;  // weight
};

class Instance {
public:
    Instance() = default;
    // Jobs must carry ids 0..n-1 in order; attributes must be non-negative
    // and pass the overflow budget (throws Error / OverflowError).
    explicit Instance(std::vector<Job> jobs);

    int n() const { return static_cast<int>(jobs_.size()); }
    bool empty() const { return jobs_.empty(); }
    const Job& job(int id) const { return jobs_[static_cast<std::size_t>(id)]; }
    const std::vector<Job>& jobs() const { return jobs_; }

private:
    std::vector<Job> jobs_;
};

// Convenience constructor from (p, d, w) rows; ids are assigned in order.
Instance make_instance(const std::vector<std::array<Value, 3>>& pdw);

struct InstanceStats {
    int nu_d = 0;  // distinct due dates
    int nu_p = 0;  // distinct processing times
    int nu_w = 0;  // distinct weights
};

// Throws EmptyInstanceError when n = 0.
InstanceStats stats(const Instance& instance);

Value total_weight(const Instance& instance);

}  // namespace tardy
