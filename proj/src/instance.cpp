#include "tardy/instance.hpp"

#include <algorithm>

namespace tardy {
namespace {

void check_magnitudes(const std::vector<Job>& jobs) {
    __int128 sum_p = 0;
    __int128 sum_w = 0;
    Value max_attr = 0;
    for (const Job& job : jobs) {
        if (job.p < 0 || job.d < 0 || job.w < 0) {
            throw Error("job attributes must be non-negative");
        }
        sum_p += job.p;
        sum_w += job.w;
        max_attr = std::max({max_attr, job.p, job.d, job.w});
    }
    const __int128 cap = kMagnitudeCap;
    const __int128 n_times_max = static_cast<__int128>(jobs.size()) * max_attr;
    if (sum_p > cap || sum_w > cap || n_times_max > cap) {
        throw OverflowError("instance magnitudes exceed the 2^62 arithmetic budget");
    }
}

}  // namespace

Instance::Instance(std::vector<Job> jobs) : jobs_(std::move(jobs)) {
    for (int i = 0; i < n(); ++i) {
        if (jobs_[static_cast<std::size_t>(i)].id != i) {
            throw Error("job ids must be exactly 0..n-1");
        }
    }
    check_magnitudes(jobs_);
}

Instance make_instance(const std::vector<std::array<Value, 3>>& pdw) {
    std::vector<Job> jobs;
    jobs.reserve(pdw.size());
    for (std::size_t i = 0; i < pdw.size(); ++i) {
        jobs.push_back(Job{static_cast<int>(i), pdw[i][0], pdw[i][1], pdw[i][2]});
    }
    return Instance(std::move(jobs));
}

InstanceStats stats(const Instance& instance) {
    if (instance.empty()) {
        throw EmptyInstanceError("stats requires a non-empty instance");
    }
    auto distinct = [&](auto proj) {
        std::vector<Value> values;
        values.reserve(static_cast<std::size_t>(instance.n()));
        for (const Job& job : instance.jobs()) values.push_back(proj(job));
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        return static_cast<int>(values.size());
    };
    return InstanceStats{distinct([](const Job& j) { return j.d; }),
                         distinct([](const Job& j) { return j.p; }),
                         distinct([](const Job& j) { return j.w; })};
}

Value total_weight(const Instance& instance) {
    __int128 sum = 0;
    for (const Job& job : instance.jobs()) sum += job.w;
    if (sum > kMagnitudeCap) {
        throw OverflowError("total weight exceeds the arithmetic budget");
    }
    return static_cast<Value>(sum);
}

}  // namespace tardy
