#pragma once

#include <vector>

#include "tardy/instance.hpp"

namespace tardy {

// Which attribute pair defines a class.
enum class ClassKind { DueProc, DueWeight, ProcWeight };

// Jobs sharing one attribute pair. Only the two fields named by the kind are
// meaningful (the third stays zero). `members` is ordered by the rule the
// kind's solver relies on:
//   DueProc    -> non-decreasing weight
//   DueWeight  -> non-decreasing processing time
//   ProcWeight -> non-decreasing due date
// `member_values` holds the free attribute of each member in the same order
// (weights, processing times, or due dates respectively).
struct JobClass {
    Value due = 0;
    Value proc = 0;
    Value weight = 0;
    std::vector<int> members;
    std::vector<Value> member_values;

    int size() const { return static_cast<int>(members.size()); }
};

struct ClassPartition {
    ClassKind kind = ClassKind::DueProc;
    std::vector<JobClass> classes;
    // Populated for ProcWeight only: sorted distinct due dates and the count
    // delta[i][j] of class-i jobs due at due_levels[j].
    std::vector<Value> due_levels;
    std::vector<std::vector<int>> delta;

    int k() const { return static_cast<int>(classes.size()); }
};

// Classes are sorted by their attribute pair (due-date first when the kind
// involves due dates), members per the JobClass ordering rules.
ClassPartition partition_classes(const Instance& instance, ClassKind kind);

const char* class_kind_name(ClassKind kind);

}  // namespace tardy
