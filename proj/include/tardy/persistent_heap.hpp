#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "tardy/errors.hpp"
#include "tardy/instance.hpp"

namespace tardy {

struct HeapEntry {
    Value key = 0;
    int id = 0;
};

// Immutable leftist heap. Copying a handle is O(1) and shares structure;
// insert/pop return new handles in O(lg n) by path copying, so mutations
// through one handle can never be observed through another. Entries are
// ordered by (key, id); MaxAtTop selects whether the largest or the smallest
// tuple surfaces at top().
template <bool MaxAtTop>
class PersistentHeap {
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        HeapEntry entry;
        int rank;
        NodePtr left;
        NodePtr right;
    };

public:
    PersistentHeap() = default;

    bool empty() const { return root_ == nullptr; }
    std::size_t size() const { return size_; }

    // Sum of all keys, maintained incrementally; O(1).
    Value key_sum() const { return sum_; }

    const HeapEntry& top() const {
        if (!root_) throw Error("top of an empty heap");
        return root_->entry;
    }

    [[nodiscard]] PersistentHeap insert(Value key, int id) const {
        NodePtr single = std::make_shared<const Node>(Node{HeapEntry{key, id}, 1, nullptr, nullptr});
        return PersistentHeap(merge(root_, single), size_ + 1, sum_ + key);
    }

    [[nodiscard]] PersistentHeap pop() const {
        if (!root_) throw Error("pop of an empty heap");
        return PersistentHeap(merge(root_->left, root_->right), size_ - 1, sum_ - root_->entry.key);
    }

    // All entries in top-first order; O(n lg n), for tests and debugging.
    std::vector<HeapEntry> drain_sorted() const {
        std::vector<HeapEntry> out;
        out.reserve(size_);
        PersistentHeap heap = *this;
        while (!heap.empty()) {
            out.push_back(heap.top());
            heap = heap.pop();
        }
        return out;
    }

private:
    PersistentHeap(NodePtr root, std::size_t size, Value sum)
        : root_(std::move(root)), size_(size), sum_(sum) {}

    static bool before(const HeapEntry& a, const HeapEntry& b) {
        if constexpr (MaxAtTop) {
            return std::make_pair(a.key, a.id) > std::make_pair(b.key, b.id);
        } else {
            return std::make_pair(a.key, a.id) < std::make_pair(b.key, b.id);
        }
    }

    static int rank_of(const NodePtr& node) { return node ? node->rank : 0; }

    static NodePtr merge(const NodePtr& a, const NodePtr& b) {
        if (!a) return b;
        if (!b) return a;
        if (before(b->entry, a->entry)) return merge(b, a);
        NodePtr merged_right = merge(a->right, b);
        // Leftist shape: the shorter right spine goes right.
        if (rank_of(a->left) >= rank_of(merged_right)) {
            return std::make_shared<const Node>(
                Node{a->entry, rank_of(merged_right) + 1, a->left, std::move(merged_right)});
        }
        return std::make_shared<const Node>(
            Node{a->entry, rank_of(a->left) + 1, std::move(merged_right), a->left});
    }

    NodePtr root_;
    std::size_t size_ = 0;
    Value sum_ = 0;
};

using MaxHeap = PersistentHeap<true>;
using MinHeap = PersistentHeap<false>;

}  // namespace tardy
