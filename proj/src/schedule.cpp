#include "tardy/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace tardy {

std::vector<int> edd_order(const Instance& instance) {
    std::vector<int> order(static_cast<std::size_t>(instance.n()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::make_pair(instance.job(a).d, a) < std::make_pair(instance.job(b).d, b);
    });
    return order;
}

std::optional<ScheduleResult> evaluate_early_set(const Instance& instance,
                                                 const std::vector<int>& early) {
    const int n = instance.n();
    std::vector<char> is_early(static_cast<std::size_t>(n), 0);
    for (int id : early) {
        if (id < 0 || id >= n) throw Error("early set contains an unknown job id");
        if (is_early[static_cast<std::size_t>(id)]) throw Error("early set contains a duplicate job id");
        is_early[static_cast<std::size_t>(id)] = 1;
    }

    ScheduleResult result;
    result.completion.assign(static_cast<std::size_t>(n), 0);
    result.order.reserve(static_cast<std::size_t>(n));

    Value t = 0;
    for (int id : edd_order(instance)) {
        if (!is_early[static_cast<std::size_t>(id)]) continue;
        t += instance.job(id).p;
        if (t > instance.job(id).d) return std::nullopt;
        result.completion[static_cast<std::size_t>(id)] = t;
        result.order.push_back(id);
    }

    for (int id = 0; id < n; ++id) {
        if (is_early[static_cast<std::size_t>(id)]) {
            result.early.push_back(id);
        } else {
            t += instance.job(id).p;
            result.completion[static_cast<std::size_t>(id)] = t;
            result.order.push_back(id);
            result.objective += instance.job(id).w;
        }
    }
    return result;
}

}  // namespace tardy
