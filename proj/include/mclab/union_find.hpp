#pragma once

#include <numeric>
#include <vector>

namespace mclab {

/// Disjoint sets over 0..size-1 with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(int size) : parent_(static_cast<std::size_t>(size)), size_(static_cast<std::size_t>(size), 1)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x)
    {
        while (parent_[idx(x)] != x) {
            parent_[idx(x)] = parent_[idx(parent_[idx(x)])];
            x = parent_[idx(x)];
        }
        return x;
    }

    /// Returns false when x and y were already joined.
    bool unite(int x, int y)
    {
        x = find(x);
        y = find(y);
        if (x == y)
            return false;
        if (size_[idx(x)] < size_[idx(y)])
            std::swap(x, y);
        parent_[idx(y)] = x;
        size_[idx(x)] += size_[idx(y)];
        return true;
    }

    bool same(int x, int y) { return find(x) == find(y); }

private:
    static std::size_t idx(int x) { return static_cast<std::size_t>(x); }

    std::vector<int> parent_;
    std::vector<int> size_;
};

} // namespace mclab
