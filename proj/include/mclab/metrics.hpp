#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "mclab/graph.hpp"

namespace mclab {

/// Diameter reported for disconnected graphs.
inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

struct GraphMetrics {
    int max_degree = 0;
    int min_degree = 0;
    int diameter = kInfiniteDiameter;
    int vertex_connectivity = 0;
    int chromatic_number = 0;
    bool is_triangle_free = true;
    bool has_cut_vertex = false;
};

inline int max_degree(const Graph& g)
{
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

inline int min_degree(const Graph& g)
{
    int best = g.order();
    for (int v = 0; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

inline int eccentricity(const Graph& g, int source)
{
    VertexSet seen = singleton(source);
    VertexSet frontier = seen;
    int depth = 0;
    while (true) {
        VertexSet next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= ~seen;
        if (next == 0)
            break;
        seen |= next;
        frontier = next;
        ++depth;
    }
    return seen == g.vertices() ? depth : kInfiniteDiameter;
}

inline int diameter(const Graph& g)
{
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        const int e = eccentricity(g, v);
        if (e == kInfiniteDiameter)
            return kInfiniteDiameter;
        best = std::max(best, e);
    }
    return best;
}

inline bool is_triangle_free(const Graph& g)
{
    for (int u = 0; u < g.order(); ++u) {
        bool found = false;
        for_each_bit(g.neighbors(u) & ~first_vertices(u + 1), [&](int v) {
            if ((g.neighbors(u) & g.neighbors(v)) != 0)
                found = true;
        });
        if (found)
            return false;
    }
    return true;
}

namespace detail {

inline void articulation_dfs(const Graph& g, int u, int parent, int& clock, std::vector<int>& order,
                             std::vector<int>& low, bool& found)
{
    order[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = ++clock;
    int children = 0;
    for_each_bit(g.neighbors(u), [&](int v) {
        const auto vi = static_cast<std::size_t>(v);
        const auto ui = static_cast<std::size_t>(u);
        if (order[vi] == 0) {
            ++children;
            articulation_dfs(g, v, u, clock, order, low, found);
            low[ui] = std::min(low[ui], low[vi]);
            if (parent >= 0 && low[vi] >= order[ui])
                found = true;
        } else if (v != parent) {
            low[ui] = std::min(low[ui], order[vi]);
        }
    });
    if (parent < 0 && children > 1)
        found = true;
}

/// Maximum number of internally vertex-disjoint s-t paths for nonadjacent s, t.
/// Unit-capacity max flow on the split graph (v_in = 2v, v_out = 2v + 1).
inline int local_vertex_connectivity(const Graph& g, int s, int t)
{
    const int n = g.order();
    const int nodes = 2 * n;
    std::vector<signed char> cap(static_cast<std::size_t>(nodes * nodes), 0);
    auto at = [&](int a, int b) -> signed char& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
    for (int v = 0; v < n; ++v)
        at(2 * v, 2 * v + 1) = (v == s || v == t) ? static_cast<signed char>(n) : 1;
    for (int u = 0; u < n; ++u)
        for_each_bit(g.neighbors(u), [&](int v) { at(2 * u + 1, 2 * v) = 1; });

    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> prev(static_cast<std::size_t>(nodes));
    std::vector<int> queue;
    while (true) {
        std::fill(prev.begin(), prev.end(), -1);
        prev[static_cast<std::size_t>(source)] = source;
        queue.assign(1, source);
        for (std::size_t head = 0; head < queue.size() && prev[static_cast<std::size_t>(sink)] < 0; ++head) {
            const int a = queue[head];
            for (int b = 0; b < nodes; ++b) {
                if (prev[static_cast<std::size_t>(b)] < 0 && at(a, b) > 0) {
                    prev[static_cast<std::size_t>(b)] = a;
                    queue.push_back(b);
                }
            }
        }
        if (prev[static_cast<std::size_t>(sink)] < 0)
            return flow;
        for (int b = sink; b != source; b = prev[static_cast<std::size_t>(b)]) {
            const int a = prev[static_cast<std::size_t>(b)];
            --at(a, b);
            ++at(b, a);
        }
        ++flow;
    }
}

} // namespace detail

inline bool has_cut_vertex(const Graph& g)
{
    std::vector<int> order(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> low(static_cast<std::size_t>(g.order()), 0);
    int clock = 0;
    bool found = false;
    for (int v = 0; v < g.order() && !found; ++v)
        if (order[static_cast<std::size_t>(v)] == 0)
            detail::articulation_dfs(g, v, -1, clock, order, low, found);
    return found;
}

/// Vertex connectivity: 0 when disconnected, n-1 for K_n, otherwise the minimum
/// number of vertex-disjoint paths over nonadjacent pairs.
inline int vertex_connectivity(const Graph& g)
{
    const int n = g.order();
    if (!is_connected(g))
        return 0;
    if (g.is_complete())
        return n - 1;
    int best = min_degree(g);
    for (int s = 0; s < n && best > 0; ++s)
        for_each_bit(g.vertices() & ~g.neighbors(s) & ~first_vertices(s + 1), [&](int t) {
            if (best > 0)
                best = std::min(best, detail::local_vertex_connectivity(g, s, t));
        });
    return best;
}

namespace detail {

class ChromaticSearch {
public:
    explicit ChromaticSearch(const Graph& g) : g_(g), color_(static_cast<std::size_t>(g.order()), -1) {}

    int solve()
    {
        if (g_.size() == 0)
            return 1;
        best_ = greedy_upper_bound();
        std::fill(color_.begin(), color_.end(), -1);
        search(0, 0);
        return best_;
    }

private:
    int greedy_upper_bound() const
    {
        std::vector<int> color(static_cast<std::size_t>(g_.order()), -1);
        int colors = 0;
        for (int v = 0; v < g_.order(); ++v) {
            std::uint64_t taken = 0;
            for_each_bit(g_.neighbors(v), [&](int u) {
                if (color[static_cast<std::size_t>(u)] >= 0)
                    taken |= std::uint64_t{1} << color[static_cast<std::size_t>(u)];
            });
            const int c = lowest(~taken);
            color[static_cast<std::size_t>(v)] = c;
            colors = std::max(colors, c + 1);
        }
        return colors;
    }

    // DSATUR branching: pick the uncolored vertex seeing the most distinct colors.
    void search(int colored, int colors_used)
    {
        if (colors_used >= best_)
            return;
        if (colored == g_.order()) {
            best_ = colors_used;
            return;
        }
        int pick = -1;
        int pick_sat = -1;
        int pick_deg = -1;
        std::uint64_t pick_taken = 0;
        for (int v = 0; v < g_.order(); ++v) {
            if (color_[static_cast<std::size_t>(v)] >= 0)
                continue;
            std::uint64_t taken = 0;
            for_each_bit(g_.neighbors(v), [&](int u) {
                if (color_[static_cast<std::size_t>(u)] >= 0)
                    taken |= std::uint64_t{1} << color_[static_cast<std::size_t>(u)];
            });
            const int sat = popcount(taken);
            const int deg = g_.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
                pick_taken = taken;
            }
        }
        for (int c = 0; c <= colors_used && c < best_ - 1; ++c) {
            if ((pick_taken >> c) & 1U)
                continue;
            color_[static_cast<std::size_t>(pick)] = c;
            search(colored + 1, std::max(colors_used, c + 1));
            color_[static_cast<std::size_t>(pick)] = -1;
        }
    }

    const Graph& g_;
    std::vector<int> color_;
    int best_ = 0;
};

} // namespace detail

inline int chromatic_number(const Graph& g) { return detail::ChromaticSearch(g).solve(); }

inline GraphMetrics metrics(const Graph& g)
{
    GraphMetrics out;
    out.max_degree = max_degree(g);
    out.min_degree = min_degree(g);
    out.diameter = diameter(g);
    out.vertex_connectivity = vertex_connectivity(g);
    out.chromatic_number = chromatic_number(g);
    out.is_triangle_free = is_triangle_free(g);
    out.has_cut_vertex = has_cut_vertex(g);
    return out;
}

} // namespace mclab
