#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mclab/graph.hpp"

namespace mclab {

inline constexpr int kMaxEnumerationOrder = 8;

/// Streams every connected labeled graph on n vertices in ascending edge-mask order
/// (bit i = i-th edge of K_n, lexicographic). A stream may be restricted to a half-open
/// mask range so that workers can split the sweep.
class ConnectedGraphStream {
public:
    explicit ConnectedGraphStream(int n, std::optional<int> edge_count = std::nullopt)
        : ConnectedGraphStream(n, edge_count, 0, mask_count(n))
    {
    }

    ConnectedGraphStream(int n, std::optional<int> edge_count, std::uint64_t begin, std::uint64_t end)
        : n_(n), edge_count_(edge_count), end_(end)
    {
        if (n < 2 || n > kMaxEnumerationOrder)
            throw Error("enumeration supports 2 <= n <= 8, got " + std::to_string(n));
        const int slots = static_cast<int>(choose2(n));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                slots_.push_back({u, v});
        if (end_ > mask_count(n))
            end_ = mask_count(n);
        if (edge_count_ && (*edge_count_ < 0 || *edge_count_ > slots)) {
            next_ = end_;
            return;
        }
        next_ = begin;
        if (edge_count_)
            next_ = first_with_popcount(begin);
    }

    static std::uint64_t mask_count(int n) { return std::uint64_t{1} << choose2(n); }

    /// Next connected graph, or nullopt when the range is exhausted.
    std::optional<Graph> next()
    {
        while (next_ < end_) {
            const std::uint64_t mask = next_;
            advance();
            if (!edge_count_ && popcount(mask) < n_ - 1)
                continue;
            if (auto g = build_if_connected(mask))
                return g;
        }
        return std::nullopt;
    }

    int order() const { return n_; }

private:
    void advance()
    {
        if (!edge_count_) {
            ++next_;
            return;
        }
        // Gosper's hack: next larger integer with the same popcount.
        const std::uint64_t x = next_;
        if (x == 0) {
            next_ = end_;
            return;
        }
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        if (r == 0 || r >= mask_count(n_)) {
            next_ = end_;
            return;
        }
        next_ = (((r ^ x) >> 2) / c) | r;
    }

    std::uint64_t first_with_popcount(std::uint64_t from) const
    {
        const int k = *edge_count_;
        if (k == 0)
            return from == 0 ? 0 : end_;
        // Smallest mask >= from with exactly k bits.
        for (std::uint64_t x = from; x < end_;) {
            const int bits = popcount(x);
            if (bits == k)
                return x;
            if (bits < k) {
                // Fill the lowest zero bits.
                std::uint64_t y = x;
                for (int need = k - bits; need > 0; --need)
                    y |= y + 1;
                return y < end_ ? y : end_;
            }
            // Too many bits: clear the lowest set run and carry.
            x = (x | (x - 1)) + 1;
        }
        return end_;
    }

    std::optional<Graph> build_if_connected(std::uint64_t mask) const
    {
        Graph g(n_);
        for_each_bit(mask, [&](int i) { g.add_edge(slots_[static_cast<std::size_t>(i)].u, slots_[static_cast<std::size_t>(i)].v); });
        if (!is_connected(g))
            return std::nullopt;
        return g;
    }

    int n_;
    std::optional<int> edge_count_;
    std::uint64_t next_ = 0;
    std::uint64_t end_ = 0;
    std::vector<Edge> slots_;
};

inline std::vector<Graph> enumerate_connected_graphs(int n, std::optional<int> edge_count = std::nullopt)
{
    std::vector<Graph> out;
    ConnectedGraphStream stream(n, edge_count);
    while (auto g = stream.next())
        out.push_back(*g);
    return out;
}

} // namespace mclab
