#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "mclab/coloring.hpp"
#include "mclab/graph.hpp"

namespace mclab {

/// A graph with an ordered vertex partition V_1..V_t and, for detached-class graphs,
/// one special vertex per class.
struct PartitionedGraph {
    Graph graph;
    std::vector<VertexSet> classes;
    std::vector<int> specials;
};

/// One color on the BFS spanning tree, a fresh color on every other edge: m - n + 2 colors.
inline EdgeColoring spanning_tree_coloring(const Graph& g)
{
    const std::vector<std::vector<Edge>> groups{spanning_tree(g)};
    return EdgeColoring::from_groups(g, groups);
}

namespace detail {

inline std::vector<Edge> star(int center, VertexSet leaves)
{
    std::vector<Edge> out;
    for_each_bit(leaves & ~singleton(center), [&](int v) { out.push_back({std::min(center, v), std::max(center, v)}); });
    return out;
}

/// Links consecutive parts cyclically: the lowest vertex of part j is joined to every
/// vertex of part j+1 (mod r) under its own color. With two parts the two stars share
/// the edge between the centers and are emitted as a single double star.
/// Requires every cross-part pair used to be an edge.
inline std::vector<std::vector<Edge>> cyclic_star_groups(std::span<const VertexSet> parts)
{
    std::vector<std::vector<Edge>> groups;
    const std::size_t r = parts.size();
    if (r == 2) {
        auto both = star(lowest(parts[0]), parts[1]);
        for (const Edge& e : star(lowest(parts[1]), parts[0]))
            both.push_back(e);
        std::sort(both.begin(), both.end());
        both.erase(std::unique(both.begin(), both.end()), both.end());
        groups.push_back(std::move(both));
        return groups;
    }
    for (std::size_t j = 0; j < r; ++j)
        groups.push_back(star(lowest(parts[j]), parts[(j + 1) % r]));
    return groups;
}

/// Connected components of the graph restricted to `within`, ordered by lowest vertex.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within)
{
    std::vector<VertexSet> out;
    while (within != 0) {
        const VertexSet comp = reachable_within(g, lowest(within), within);
        out.push_back(comp);
        within &= ~comp;
    }
    return out;
}

inline bool is_complete_multipartite(const Graph& g, std::span<const VertexSet> classes)
{
    VertexSet seen = 0;
    for (VertexSet c : classes) {
        if (c == 0 || (seen & c) != 0)
            return false;
        seen |= c;
    }
    if (seen != g.vertices())
        return false;
    for (VertexSet c : classes) {
        bool ok = true;
        for_each_bit(c, [&](int v) { ok = ok && g.neighbors(v) == (g.vertices() & ~c); });
        if (!ok)
            return false;
    }
    return true;
}

} // namespace detail

/// Coloring wasting at most p = C(n,2) - m colors. Cases keyed on the complement's
/// non-isolated vertices Ṽ:
///   p >= n-2            spanning-tree coloring;
///   |Ṽ| <= p+1          one star from the lowest universal vertex onto Ṽ;
///   two components      a double star between the components' lowest vertices;
///   l >= 3 components   cyclic star linking of the components.
inline EdgeColoring sparse_complement_coloring(const Graph& g)
{
    if (!is_connected(g))
        throw Error("sparse_complement_coloring needs a connected graph");
    const int n = g.order();
    const long long p = choose2(n) - g.size();
    if (p >= n - 2)
        return spanning_tree_coloring(g);

    const Graph missing = complement(g);
    VertexSet touched = 0;
    for (int v = 0; v < n; ++v)
        if (missing.degree(v) > 0)
            touched |= singleton(v);

    std::vector<std::vector<Edge>> groups;
    if (popcount(touched) <= p + 1) {
        const VertexSet universal = g.vertices() & ~touched;
        if (popcount(universal) < 2)
            throw Error("internal: expected two universal vertices");
        if (touched != 0)
            groups.push_back(detail::star(lowest(universal), touched));
    } else {
        const auto parts = detail::components_within(missing, touched);
        if (parts.size() < 2)
            throw Error("internal: complement has a single nontrivial component");
        groups = detail::cyclic_star_groups(parts);
    }
    EdgeColoring col = EdgeColoring::from_groups(g, groups);
    if (col.waste() > p)
        throw Error("internal: sparse complement coloring wastes " + std::to_string(col.waste()) + " > p = " +
                    std::to_string(p));
    return col;
}

/// Complete multipartite graph; vertices are assigned to parts in ascending id order.
inline PartitionedGraph complete_multipartite(std::span<const int> sizes)
{
    if (sizes.size() < 2)
        throw Error("complete multipartite graph needs at least 2 parts");
    int n = 0;
    for (int s : sizes) {
        if (s < 1)
            throw Error("part sizes must be positive");
        n += s;
    }
    PartitionedGraph pg{Graph(n), {}, {}};
    int next = 0;
    for (int s : sizes) {
        pg.classes.push_back(first_vertices(next + s) & ~first_vertices(next));
        next += s;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pg.graph.add_edge(u, v);
    for (VertexSet c : pg.classes)
        for_each_bit(c, [&](int u) {
            for_each_bit(c & ~first_vertices(u + 1), [&](int v) { pg.graph.remove_edge(u, v); });
        });
    return pg;
}

/// Cyclic star linking across the parts: m - n + r colors.
inline EdgeColoring multipartite_star_coloring(const PartitionedGraph& pg)
{
    if (pg.classes.size() < 2 || !detail::is_complete_multipartite(pg.graph, pg.classes))
        throw Error("multipartite_star_coloring needs a complete multipartite graph with >= 2 parts");
    return EdgeColoring::from_groups(pg.graph, detail::cyclic_star_groups(pg.classes));
}

/// K_n split into t near-equal classes (larger classes first, ascending ids), with the
/// lowest vertex v_j of each class cut off from the rest of its class.
/// m = C(n,2) - n + t.
inline PartitionedGraph detached_class_graph(int n, int t)
{
    if (t < 3 || t > n)
        throw Error("detached_class_graph needs 3 <= t <= n");
    PartitionedGraph pg{Graph::complete(n), {}, {}};
    int next = 0;
    for (int j = 0; j < t; ++j) {
        const int size = n / t + (j < n % t ? 1 : 0);
        const VertexSet cls = first_vertices(next + size) & ~first_vertices(next);
        pg.classes.push_back(cls);
        pg.specials.push_back(next);
        for_each_bit(cls & ~singleton(next), [&](int v) { pg.graph.remove_edge(next, v); });
        next += size;
    }
    return pg;
}

namespace detail {

inline bool is_detached_class_graph(const PartitionedGraph& pg)
{
    const int t = static_cast<int>(pg.classes.size());
    if (t < 3 || t > pg.graph.order() || pg.specials.size() != pg.classes.size())
        return false;
    const PartitionedGraph expected = detached_class_graph(pg.graph.order(), t);
    return expected.graph == pg.graph && expected.classes == pg.classes && expected.specials == pg.specials;
}

} // namespace detail

/// Cyclic star linking over the spanning complete t-partite subgraph; internal edges
/// stay fresh. C(n,2) - 2n + 2t colors.
inline EdgeColoring detached_class_coloring(const PartitionedGraph& pg)
{
    if (!detail::is_detached_class_graph(pg))
        throw Error("detached_class_coloring expects a graph from detached_class_graph");
    return EdgeColoring::from_groups(pg.graph, detail::cyclic_star_groups(pg.classes));
}

struct ColoredGraph {
    Graph graph;
    EdgeColoring coloring;
};

/// Complete (n-t+1)-partite graph with classes {0},{1},...,{n-t-1} and a big class of the
/// last t vertices, plus `extra` edges inside the big class in lexicographic order.
/// The star from vertex 0 onto the big class is one color; m - t + 1 colors in total.
inline ColoredGraph window_sharp_graph(int n, int t, int extra)
{
    if (n < 3 || n > kMaxVertices || t < 2 || t > n - 1 || extra < 0 || extra > t - 2)
        throw Error("window_sharp_graph needs 2 <= t <= n-1 and 0 <= extra <= t-2");
    std::vector<int> sizes(static_cast<std::size_t>(n - t), 1);
    sizes.push_back(t);
    PartitionedGraph pg = complete_multipartite(sizes);
    const VertexSet big = pg.classes.back();
    int added = 0;
    for (int u = n - t; u < n && added < extra; ++u)
        for (int v = u + 1; v < n && added < extra; ++v, ++added)
            pg.graph.add_edge(u, v);
    const std::vector<std::vector<Edge>> groups{detail::star(0, big)};
    EdgeColoring col = EdgeColoring::from_groups(pg.graph, groups);
    return {pg.graph, std::move(col)};
}

/// K_{n-2} on 0..n-3 plus nonadjacent u = n-2, v = n-1; u is joined to clique vertex 0 and
/// v to every other clique vertex. m = C(n,2) - n + 1, diameter 3.
inline Graph diameter_three_graph(int n)
{
    if (n < 5 || n > kMaxVertices)
        throw Error("diameter_three_graph needs n >= 5");
    Graph g(n);
    for (int a = 0; a < n - 2; ++a)
        for (int b = a + 1; b < n - 2; ++b)
            g.add_edge(a, b);
    g.add_edge(0, n - 2);
    for (int a = 1; a < n - 2; ++a)
        g.add_edge(a, n - 1);
    return g;
}

/// P_3 for n = 3, C_4 for n = 4; otherwise K_{n-2} on 0..n-3 plus adjacent u = n-2,
/// v = n-1 with u joined to clique vertex 0 and v to the others. u is the only vertex
/// of degree 2 and m = C(n,2) - n + 2.
inline Graph lone_degree_two_graph(int n)
{
    if (n < 3 || n > kMaxVertices)
        throw Error("lone_degree_two_graph needs n >= 3");
    Graph g(n);
    if (n == 3) {
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        return g;
    }
    if (n == 4) {
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(0, 3);
        return g;
    }
    g = diameter_three_graph(n);
    g.add_edge(n - 2, n - 1);
    return g;
}

} // namespace mclab
