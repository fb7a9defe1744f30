#include <gtest/gtest.h>

#include "mclab/constructions.hpp"
#include "mclab/enumerate.hpp"
#include "mclab/graph6.hpp"
#include "mclab/metrics.hpp"
#include "mclab/solver.hpp"

using namespace mclab;

namespace {

void expect_valid_tree_coloring(const EdgeColoring& col)
{
    EXPECT_TRUE(verify_mc(col).ok());
    EXPECT_TRUE(classes_are_trees(col));
}

} // namespace

TEST(SpanningTreeColoring, Examples)
{
    Graph path(5);
    for (int v = 0; v < 4; ++v)
        path.add_edge(v, v + 1);
    EXPECT_EQ(spanning_tree_coloring(path).color_count(), 1);
    EXPECT_EQ(spanning_tree_coloring(Graph::complete(4)).color_count(), 4);
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            const EdgeColoring col = spanning_tree_coloring(g);
            ASSERT_EQ(col.color_count(), g.size() - n + 2);
            ASSERT_TRUE(verify_mc(col).ok());
        }
    EXPECT_THROW(spanning_tree_coloring(Graph(3)), Error);
}

TEST(SparseComplementColoring, Examples)
{
    Graph k5e = Graph::complete(5);
    k5e.remove_edge(1, 3);
    const EdgeColoring a = sparse_complement_coloring(k5e);
    expect_valid_tree_coloring(a);
    EXPECT_LE(a.waste(), 1);
    EXPECT_GE(a.color_count(), 8);

    for (int n = 2; n <= 9; ++n)
        EXPECT_EQ(sparse_complement_coloring(Graph::complete(n)).color_count(), choose2(n));

    // K_6 minus a perfect matching: complement is three disjoint edges, linked cyclically.
    Graph k6pm = Graph::complete(6);
    k6pm.remove_edge(0, 1);
    k6pm.remove_edge(2, 3);
    k6pm.remove_edge(4, 5);
    const EdgeColoring b = sparse_complement_coloring(k6pm);
    expect_valid_tree_coloring(b);
    EXPECT_LE(b.waste(), 3);
    EXPECT_EQ(b.color_count(), 9);

    // Two complement components of sizes 2 and 2 (p = 2, n = 6): double star, waste 2.
    Graph two = Graph::complete(6);
    two.remove_edge(0, 1);
    two.remove_edge(2, 3);
    const EdgeColoring c = sparse_complement_coloring(two);
    expect_valid_tree_coloring(c);
    EXPECT_EQ(c.waste(), 2);

    EXPECT_THROW(sparse_complement_coloring(Graph(4)), Error);
}

TEST(SparseComplementColoring, WasteAtMostMissingEdgesUpToSeven)
{
    for (int n = 2; n <= 7; ++n) {
        ConnectedGraphStream stream(n);
        while (auto g = stream.next()) {
            const EdgeColoring col = sparse_complement_coloring(*g);
            const long long p = choose2(n) - g->size();
            ASSERT_LE(col.waste(), p) << emit_graph6(*g);
            if (n <= 6) {
                ASSERT_TRUE(verify_mc(col).ok()) << emit_graph6(*g);
                ASSERT_TRUE(classes_are_trees(col)) << emit_graph6(*g);
            }
        }
    }
}

TEST(CompleteMultipartite, Examples)
{
    EXPECT_EQ(complete_multipartite(std::vector<int>{1, 1, 1}).graph, Graph::complete(3));

    const Graph c4 = complete_multipartite(std::vector<int>{2, 2}).graph;
    EXPECT_EQ(c4.size(), 4);
    for (int v = 0; v < 4; ++v)
        EXPECT_EQ(c4.degree(v), 2);

    Graph k4e = Graph::complete(4);
    k4e.remove_edge(2, 3);
    EXPECT_EQ(complete_multipartite(std::vector<int>{1, 1, 2}).graph, k4e);

    EXPECT_THROW(complete_multipartite(std::vector<int>{3}), Error);
    EXPECT_THROW(complete_multipartite(std::vector<int>{2, 0}), Error);
}

TEST(MultipartiteStarColoring, Examples)
{
    const auto k4e = complete_multipartite(std::vector<int>{1, 1, 2});
    const EdgeColoring a = multipartite_star_coloring(k4e);
    expect_valid_tree_coloring(a);
    EXPECT_EQ(a.color_count(), 4);

    const EdgeColoring b = multipartite_star_coloring(complete_multipartite(std::vector<int>{2, 2}));
    expect_valid_tree_coloring(b);
    EXPECT_EQ(b.color_count(), 2);

    EXPECT_EQ(multipartite_star_coloring(complete_multipartite(std::vector<int>{1, 1, 1})).color_count(), 3);

    PartitionedGraph broken = complete_multipartite(std::vector<int>{2, 2});
    broken.graph.add_edge(0, 1);
    EXPECT_THROW(multipartite_star_coloring(broken), Error);
}

TEST(MultipartiteStarColoring, CountIsEdgesMinusOrderPlusParts)
{
    const std::vector<std::vector<int>> shapes{{1, 2}, {3, 3}, {1, 4}, {2, 3, 4}, {1, 1, 1, 5}, {2, 2, 2, 2}, {3, 1, 4, 1, 5}};
    for (const auto& sizes : shapes) {
        const PartitionedGraph pg = complete_multipartite(sizes);
        const EdgeColoring col = multipartite_star_coloring(pg);
        expect_valid_tree_coloring(col);
        EXPECT_EQ(col.color_count(), pg.graph.size() - pg.graph.order() + static_cast<int>(sizes.size()));
    }
}

TEST(DetachedClassGraph, Examples)
{
    const PartitionedGraph g63 = detached_class_graph(6, 3);
    EXPECT_EQ(g63.graph.size(), 12);

    EXPECT_EQ(detached_class_graph(6, 6).graph, Graph::complete(6));

    const PartitionedGraph g73 = detached_class_graph(7, 3);
    ASSERT_EQ(g73.classes.size(), 3U);
    EXPECT_EQ(popcount(g73.classes[0]), 3);
    EXPECT_EQ(popcount(g73.classes[1]), 2);
    EXPECT_EQ(popcount(g73.classes[2]), 2);
    EXPECT_EQ(g73.graph.size(), 17);
    EXPECT_EQ(g73.specials, (std::vector<int>{0, 3, 5}));

    EXPECT_THROW(detached_class_graph(6, 2), Error);
    EXPECT_THROW(detached_class_graph(6, 7), Error);
}

TEST(DetachedClassGraph, StructureUpToForty)
{
    for (int n = 3; n <= 40; ++n) {
        for (int t = 3; t <= n; ++t) {
            const PartitionedGraph pg = detached_class_graph(n, t);
            ASSERT_EQ(pg.graph.size(), choose2(n) - n + t);
            VertexSet all = 0;
            int smallest = n;
            int largest = 0;
            for (std::size_t j = 0; j < pg.classes.size(); ++j) {
                const VertexSet cls = pg.classes[j];
                ASSERT_EQ(all & cls, 0U);
                all |= cls;
                smallest = std::min(smallest, popcount(cls));
                largest = std::max(largest, popcount(cls));
                const int special = pg.specials[j];
                ASSERT_EQ(special, lowest(cls));
                ASSERT_EQ(pg.graph.neighbors(special) & cls, 0U);
            }
            ASSERT_EQ(all, pg.graph.vertices());
            ASSERT_LE(largest - smallest, 1);
        }
    }
}

TEST(DetachedClassColoring, Examples)
{
    const EdgeColoring a = detached_class_coloring(detached_class_graph(6, 3));
    expect_valid_tree_coloring(a);
    EXPECT_EQ(a.color_count(), 9);

    EXPECT_EQ(detached_class_coloring(detached_class_graph(5, 4)).color_count(), 8);
    EXPECT_EQ(detached_class_coloring(detached_class_graph(7, 7)).color_count(), choose2(7));

    PartitionedGraph foreign = detached_class_graph(6, 3);
    foreign.graph.add_edge(0, 1);
    EXPECT_THROW(detached_class_coloring(foreign), Error);
    EXPECT_THROW(detached_class_coloring(complete_multipartite(std::vector<int>{2, 2, 2})), Error);
}

TEST(DetachedClassColoring, SimpleAndValid)
{
    for (int n = 3; n <= 12; ++n)
        for (int t = 3; t <= n; ++t) {
            const EdgeColoring col = detached_class_coloring(detached_class_graph(n, t));
            ASSERT_TRUE(is_simple(col));
            ASSERT_TRUE(classes_span_nonedges(col));
        }
}

TEST(WindowSharpGraph, Examples)
{
    const ColoredGraph a = window_sharp_graph(6, 3, 0);
    EXPECT_EQ(a.graph.size(), 12);
    EXPECT_EQ(a.coloring.color_count(), 10);
    expect_valid_tree_coloring(a.coloring);

    const ColoredGraph b = window_sharp_graph(6, 3, 1);
    EXPECT_EQ(b.graph.size(), 13);
    EXPECT_EQ(b.coloring.color_count(), 11);
    EXPECT_TRUE(b.graph.has_edge(3, 4)); // first extra edge inside the big class {3,4,5}

    for (int n = 3; n <= 9; ++n) {
        const ColoredGraph split = window_sharp_graph(n, 2, 0);
        EXPECT_EQ(split.coloring.color_count(), split.graph.size() - 1);
    }

    EXPECT_THROW(window_sharp_graph(6, 1, 0), Error);
    EXPECT_THROW(window_sharp_graph(6, 6, 0), Error);
    EXPECT_THROW(window_sharp_graph(6, 3, 2), Error);
    EXPECT_THROW(window_sharp_graph(6, 3, -1), Error);
}

TEST(WindowSharpGraph, EdgeCountAndColorsUpToForty)
{
    for (int n = 3; n <= 40; ++n)
        for (int t = 2; t <= n - 1; ++t)
            for (int extra = 0; extra <= t - 2; ++extra) {
                const ColoredGraph cg = window_sharp_graph(n, t, extra);
                ASSERT_EQ(cg.graph.size(), choose2(n - t) + t * (n - t) + extra);
                ASSERT_EQ(cg.coloring.color_count(), cg.graph.size() - t + 1);
            }
}

TEST(DiameterThreeGraph, Examples)
{
    const Graph h5 = diameter_three_graph(5);
    EXPECT_EQ(h5.size(), 6);
    EXPECT_EQ(diameter(h5), 3);
    const Graph h6 = diameter_three_graph(6);
    EXPECT_EQ(h6.size(), 10);
    EXPECT_EQ(diameter(h6), 3);
    for (int n = 5; n <= 30; ++n) {
        const Graph h = diameter_three_graph(n);
        EXPECT_EQ(h.size(), choose2(n) - n + 1);
        EXPECT_EQ(diameter(h), 3);
        // u = n-2 hangs off clique vertex 0 alone, so 0 separates it.
        EXPECT_TRUE(metrics(h).has_cut_vertex);
    }
    EXPECT_THROW(diameter_three_graph(4), Error);
}

TEST(LoneDegreeTwoGraph, Examples)
{
    const Graph p3 = lone_degree_two_graph(3);
    EXPECT_EQ(p3.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
    const Graph c4 = lone_degree_two_graph(4);
    EXPECT_EQ(c4.size(), 4);
    for (int v = 0; v < 4; ++v)
        EXPECT_EQ(c4.degree(v), 2);

    EXPECT_EQ(lone_degree_two_graph(5).size(), 7);
    for (int n = 5; n <= 12; ++n) {
        const Graph g = lone_degree_two_graph(n);
        EXPECT_EQ(g.size(), choose2(n) - n + 2);
        EXPECT_EQ(min_degree(g), 2);
        int degree_two = 0;
        for (int v = 0; v < n; ++v)
            degree_two += g.degree(v) == 2 ? 1 : 0;
        EXPECT_EQ(degree_two, 1);
        EXPECT_EQ(g.degree(n - 2), 2);
        EXPECT_FALSE(is_s_perfectly_connected(g, 2));
    }
    EXPECT_THROW(lone_degree_two_graph(2), Error);
}
