#include "tardy/partition.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace tardy {
namespace {

std::pair<Value, Value> class_key(const Job& job, ClassKind kind) {
    switch (kind) {
        case ClassKind::DueProc: return {job.d, job.p};
        case ClassKind::DueWeight: return {job.d, job.w};
        case ClassKind::ProcWeight: return {job.p, job.w};
    }
    throw Error("unknown class kind");
}

}  // namespace

const char* class_kind_name(ClassKind kind) {
    switch (kind) {
        case ClassKind::DueProc: return "due+proc";
        case ClassKind::DueWeight: return "due+weight";
        case ClassKind::ProcWeight: return "proc+weight";
    }
    return "?";
}

ClassPartition partition_classes(const Instance& instance, ClassKind kind) {
    std::map<std::pair<Value, Value>, std::vector<int>> groups;
    for (const Job& job : instance.jobs()) {
        groups[class_key(job, kind)].push_back(job.id);
    }

    ClassPartition partition;
    partition.kind = kind;
    for (auto& [key, members] : groups) {
        JobClass cls;
        switch (kind) {
            case ClassKind::DueProc:
                cls.due = key.first;
                cls.proc = key.second;
                std::sort(members.begin(), members.end(), [&](int a, int b) {
                    return std::make_pair(instance.job(a).w, a) < std::make_pair(instance.job(b).w, b);
                });
                break;
            case ClassKind::DueWeight:
                cls.due = key.first;
                cls.weight = key.second;
                std::sort(members.begin(), members.end(), [&](int a, int b) {
                    return std::make_pair(instance.job(a).p, a) < std::make_pair(instance.job(b).p, b);
                });
                break;
            case ClassKind::ProcWeight:
                cls.proc = key.first;
                cls.weight = key.second;
                std::sort(members.begin(), members.end(), [&](int a, int b) {
                    return std::make_pair(instance.job(a).d, a) < std::make_pair(instance.job(b).d, b);
                });
                break;
        }
        cls.members = std::move(members);
        cls.member_values.reserve(cls.members.size());
        for (int id : cls.members) {
            const Job& job = instance.job(id);
            switch (kind) {
                case ClassKind::DueProc: cls.member_values.push_back(job.w); break;
                case ClassKind::DueWeight: cls.member_values.push_back(job.p); break;
                case ClassKind::ProcWeight: cls.member_values.push_back(job.d); break;
            }
        }
        partition.classes.push_back(std::move(cls));
    }

    if (kind == ClassKind::ProcWeight) {
        for (const Job& job : instance.jobs()) partition.due_levels.push_back(job.d);
        std::sort(partition.due_levels.begin(), partition.due_levels.end());
        partition.due_levels.erase(
            std::unique(partition.due_levels.begin(), partition.due_levels.end()),
            partition.due_levels.end());

        partition.delta.assign(static_cast<std::size_t>(partition.k()),
                               std::vector<int>(partition.due_levels.size(), 0));
        for (int i = 0; i < partition.k(); ++i) {
            for (Value due : partition.classes[static_cast<std::size_t>(i)].member_values) {
                const auto it = std::lower_bound(partition.due_levels.begin(),
                                                 partition.due_levels.end(), due);
                const auto level = static_cast<std::size_t>(it - partition.due_levels.begin());
                partition.delta[static_cast<std::size_t>(i)][level] += 1;
            }
        }
    }
    return partition;
}

}  // namespace tardy
