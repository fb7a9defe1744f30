#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mclab {

inline constexpr int kMaxVertices = 62;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vertex subsets are 64-bit masks; vertex v is bit v.
using VertexSet = std::uint64_t;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

constexpr VertexSet first_vertices(int n) { return n >= 64 ? ~VertexSet{0} : singleton(n) - 1; }

constexpr int popcount(std::uint64_t x) { return std::popcount(x); }

constexpr int lowest(std::uint64_t x) { return std::countr_zero(x); }

template <typename Fn>
constexpr void for_each_bit(std::uint64_t bits, Fn&& fn)
{
    while (bits != 0) {
        fn(lowest(bits));
        bits &= bits - 1;
    }
}

constexpr long long choose2(long long n) { return n * (n - 1) / 2; }

struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1 with one bitset row per vertex.
class Graph {
public:
    Graph() : Graph(2) {}

    explicit Graph(int n) : n_(n)
    {
        if (n < 2 || n > kMaxVertices)
            throw Error("graph order " + std::to_string(n) + " outside [2, 62]");
    }

    static Graph complete(int n)
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    static Graph from_edges(int n, std::span<const Edge> edges)
    {
        Graph g(n);
        for (const Edge& e : edges)
            g.add_edge(e.u, e.v);
        return g;
    }

    /// Bit i of `mask` selects the i-th edge of K_n in lexicographic order.
    /// Requires C(n,2) <= 64.
    static Graph from_edge_mask(int n, std::uint64_t mask)
    {
        if (choose2(n) > 64)
            throw Error("edge masks need C(n,2) <= 64");
        Graph g(n);
        int index = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++index)
                if ((mask >> index) & 1U)
                    g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }
    int size() const { return m_; }

    VertexSet vertices() const { return first_vertices(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }

    void add_edge(int u, int v)
    {
        check_pair(u, v);
        if (has_edge(u, v))
            return;
        adj_[u] |= singleton(v);
        adj_[v] |= singleton(u);
        ++m_;
    }

    void remove_edge(int u, int v)
    {
        check_pair(u, v);
        if (!has_edge(u, v))
            return;
        adj_[u] &= ~singleton(v);
        adj_[v] &= ~singleton(u);
        --m_;
    }

    /// Edges with u < v in lexicographic order. Colorings index into this list.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for_each_bit(adj_[u] & ~first_vertices(u + 1), [&](int v) { out.push_back({u, v}); });
        return out;
    }

    /// Inverse of from_edge_mask.
    std::uint64_t edge_mask() const
    {
        if (choose2(n_) > 64)
            throw Error("edge masks need C(n,2) <= 64");
        std::uint64_t mask = 0;
        int index = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v, ++index)
                if (has_edge(u, v))
                    mask |= std::uint64_t{1} << index;
        return mask;
    }

    bool is_complete() const { return m_ == choose2(n_); }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        if (a.n_ != b.n_)
            return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v])
                return false;
        return true;
    }

private:
    void check_pair(int u, int v) const
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
            throw Error("invalid edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }

    int n_ = 0;
    int m_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

inline Graph complement(const Graph& g)
{
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v))
                h.add_edge(u, v);
    return h;
}

/// Vertices reachable from `start` using only vertices in `within`.
inline VertexSet reachable_within(const Graph& g, int start, VertexSet within)
{
    VertexSet seen = singleton(start) & within;
    VertexSet frontier = seen;
    while (frontier != 0) {
        VertexSet next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// True when the induced subgraph G[within] is connected (empty counts as connected).
inline bool connected_within(const Graph& g, VertexSet within)
{
    if (within == 0)
        return true;
    return reachable_within(g, lowest(within), within) == within;
}

inline bool is_connected(const Graph& g) { return connected_within(g, g.vertices()); }

/// BFS spanning tree of G[within] rooted at its lowest vertex, neighbors visited in
/// ascending id order. Returned edges are sorted lexicographically.
inline std::vector<Edge> spanning_tree_within(const Graph& g, VertexSet within)
{
    if (!connected_within(g, within))
        throw Error("spanning tree requested for a disconnected vertex set");
    std::vector<Edge> tree;
    if (within == 0)
        return tree;
    std::vector<int> queue{lowest(within)};
    VertexSet seen = singleton(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for_each_bit(g.neighbors(u) & within & ~seen, [&](int v) {
            seen |= singleton(v);
            queue.push_back(v);
            tree.push_back({std::min(u, v), std::max(u, v)});
        });
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

inline std::vector<Edge> spanning_tree(const Graph& g)
{
    if (!is_connected(g))
        throw Error("spanning tree requested for a disconnected graph");
    return spanning_tree_within(g, g.vertices());
}

/// Number of edges of G with both ends in `within`.
inline int induced_size(const Graph& g, VertexSet within)
{
    int twice = 0;
    for_each_bit(within, [&](int v) { twice += popcount(g.neighbors(v) & within); });
    return twice / 2;
}

} // namespace mclab
