#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mclab/graph.hpp"
#include "mclab/union_find.hpp"

namespace mclab {

/// One color class: every edge carrying `color`.
struct ColorClass {
    int color = 0;
    std::vector<Edge> edges;
    VertexSet vertices = 0;
    bool is_tree = false;
    int waste = 0; // |edges| - 1

    bool nontrivial() const { return edges.size() >= 2; }
};

/// Assignment of a color id to every edge of a graph, stored against the graph's
/// lexicographic edge order. Color ids are contiguous from 0.
class EdgeColoring {
public:
    /// `colors` runs parallel to g.edges(). Any non-negative ids are accepted and
    /// renumbered to 0..c-1 preserving their relative order.
    EdgeColoring(Graph g, std::vector<int> colors) : graph_(std::move(g)), edges_(graph_.edges()), colors_(std::move(colors))
    {
        if (colors_.size() != edges_.size())
            throw Error("coloring lists " + std::to_string(colors_.size()) + " colors for " + std::to_string(edges_.size()) +
                        " edges");
        std::map<int, int> renumber;
        for (int c : colors_) {
            if (c < 0)
                throw Error("negative color id " + std::to_string(c));
            renumber.emplace(c, 0);
        }
        int next = 0;
        for (auto& [id, fresh] : renumber)
            fresh = next++;
        for (int& c : colors_)
            c = renumber[c];
        color_count_ = next;
    }

    /// Each group becomes one color; edges outside every group get fresh colors.
    /// Ids are assigned by first appearance in edge order.
    static EdgeColoring from_groups(Graph g, std::span<const std::vector<Edge>> groups)
    {
        const std::vector<Edge> edges = g.edges();
        std::vector<int> colors(edges.size(), -1);
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            for (Edge e : groups[gi]) {
                if (e.u > e.v)
                    std::swap(e.u, e.v);
                const auto it = std::lower_bound(edges.begin(), edges.end(), e);
                if (it == edges.end() || *it != e)
                    throw Error("group edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the graph");
                auto& slot = colors[static_cast<std::size_t>(it - edges.begin())];
                if (slot >= 0)
                    throw Error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is in two groups");
                slot = static_cast<int>(gi);
            }
        }
        int fresh = static_cast<int>(groups.size());
        for (int& c : colors)
            if (c < 0)
                c = fresh++;
        return EdgeColoring(std::move(g), std::move(colors)).canonical();
    }

    const Graph& graph() const { return graph_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& colors() const { return colors_; }

    int color_count() const { return color_count_; }
    int waste() const { return graph_.size() - color_count_; }

    /// Renumbered so that colors first appear in ascending order along the edge list.
    EdgeColoring canonical() const
    {
        std::vector<int> mapping(static_cast<std::size_t>(color_count_), -1);
        std::vector<int> out(colors_.size());
        int next = 0;
        for (std::size_t i = 0; i < colors_.size(); ++i) {
            int& m = mapping[static_cast<std::size_t>(colors_[i])];
            if (m < 0)
                m = next++;
            out[i] = m;
        }
        return EdgeColoring(graph_, std::move(out));
    }

    std::vector<ColorClass> classes() const
    {
        std::vector<ColorClass> out(static_cast<std::size_t>(color_count_));
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            ColorClass& cls = out[static_cast<std::size_t>(colors_[i])];
            cls.edges.push_back(edges_[i]);
            cls.vertices |= singleton(edges_[i].u) | singleton(edges_[i].v);
        }
        for (std::size_t c = 0; c < out.size(); ++c) {
            ColorClass& cls = out[c];
            cls.color = static_cast<int>(c);
            cls.waste = static_cast<int>(cls.edges.size()) - 1;
            DisjointSets ds(graph_.order());
            bool acyclic = true;
            for (const Edge& e : cls.edges)
                acyclic = ds.unite(e.u, e.v) && acyclic;
            cls.is_tree = acyclic && static_cast<int>(cls.edges.size()) == popcount(cls.vertices) - 1;
        }
        return out;
    }

    friend bool operator==(const EdgeColoring& a, const EdgeColoring& b)
    {
        return a.graph_ == b.graph_ && a.colors_ == b.colors_;
    }

private:
    Graph graph_;
    std::vector<Edge> edges_;
    std::vector<int> colors_;
    int color_count_ = 0;
};

/// Lexicographically first vertex pair with no monochromatic path, if any.
/// Per-color union-find, then each vertex's reachable set is the union of its
/// components across colors.
inline std::optional<Edge> first_uncovered_pair(const Graph& g, std::span<const Edge> edges, std::span<const int> colors,
                                                int color_count)
{
    const int n = g.order();
    DisjointSets ds(n * color_count);
    std::vector<VertexSet> touched(static_cast<std::size_t>(color_count), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int base = colors[i] * n;
        ds.unite(base + edges[i].u, base + edges[i].v);
        touched[static_cast<std::size_t>(colors[i])] |= singleton(edges[i].u) | singleton(edges[i].v);
    }
    std::vector<VertexSet> reach(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> component(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < color_count; ++c) {
        const int base = c * n;
        const VertexSet members = touched[static_cast<std::size_t>(c)];
        for_each_bit(members, [&](int v) { component[static_cast<std::size_t>(v)] = 0; });
        for_each_bit(members, [&](int v) { component[static_cast<std::size_t>(ds.find(base + v) - base)] |= singleton(v); });
        for_each_bit(members, [&](int v) {
            reach[static_cast<std::size_t>(v)] |= component[static_cast<std::size_t>(ds.find(base + v) - base)];
        });
    }
    for (int u = 0; u < n; ++u) {
        const VertexSet missing = g.vertices() & ~first_vertices(u + 1) & ~reach[static_cast<std::size_t>(u)];
        if (missing != 0)
            return Edge{u, lowest(missing)};
    }
    return std::nullopt;
}

struct McVerdict {
    std::optional<Edge> failing_pair;

    bool ok() const { return !failing_pair.has_value(); }
};

/// Checks that every vertex pair is joined by a monochromatic path.
inline McVerdict verify_mc(const EdgeColoring& col)
{
    return {first_uncovered_pair(col.graph(), col.edges(), col.colors(), col.color_count())};
}

inline int color_count(const EdgeColoring& col) { return col.color_count(); }
inline int waste(const EdgeColoring& col) { return col.waste(); }

inline bool classes_are_trees(const EdgeColoring& col)
{
    const auto classes = col.classes();
    return std::all_of(classes.begin(), classes.end(), [](const ColorClass& c) { return c.is_tree; });
}

/// Nontrivial classes pairwise share at most one vertex. Requires tree classes.
inline bool is_simple(const EdgeColoring& col)
{
    const auto classes = col.classes();
    std::vector<VertexSet> big;
    for (const ColorClass& c : classes) {
        if (!c.is_tree)
            throw Error("is_simple requires every color class to be a tree");
        if (c.nontrivial())
            big.push_back(c.vertices);
    }
    for (std::size_t i = 0; i < big.size(); ++i)
        for (std::size_t j = i + 1; j < big.size(); ++j)
            if (popcount(big[i] & big[j]) > 1)
                return false;
    return true;
}

/// Every nontrivial class spans at least one pair of vertices nonadjacent in the graph.
inline bool classes_span_nonedges(const EdgeColoring& col)
{
    const Graph& g = col.graph();
    for (const ColorClass& c : col.classes()) {
        if (!c.nontrivial())
            continue;
        bool has_gap = false;
        for_each_bit(c.vertices, [&](int u) {
            if ((c.vertices & ~g.neighbors(u) & ~singleton(u)) != 0)
                has_gap = true;
        });
        if (!has_gap)
            return false;
    }
    return true;
}

} // namespace mclab
