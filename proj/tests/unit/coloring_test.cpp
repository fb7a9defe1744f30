#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "mclab/coloring.hpp"
#include "mclab/coloring_json.hpp"
#include "mclab/constructions.hpp"
#include "mclab/enumerate.hpp"
#include "oracles.hpp"

using namespace mclab;

namespace {

Graph four_cycle()
{
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    return g;
}

/// Independent MC check: for every pair, search for a path inside some color class.
bool brute_mc(const EdgeColoring& col)
{
    const Graph& g = col.graph();
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool joined = false;
            for (int c = 0; c < col.color_count() && !joined; ++c) {
                std::vector<bool> seen(static_cast<std::size_t>(n), false);
                std::vector<int> stack{u};
                seen[static_cast<std::size_t>(u)] = true;
                while (!stack.empty()) {
                    const int x = stack.back();
                    stack.pop_back();
                    for (std::size_t i = 0; i < col.edges().size(); ++i) {
                        if (col.colors()[i] != c)
                            continue;
                        const Edge e = col.edges()[i];
                        const int y = e.u == x ? e.v : (e.v == x ? e.u : -1);
                        if (y >= 0 && !seen[static_cast<std::size_t>(y)]) {
                            seen[static_cast<std::size_t>(y)] = true;
                            stack.push_back(y);
                        }
                    }
                }
                joined = seen[static_cast<std::size_t>(v)];
            }
            if (!joined)
                return false;
        }
    }
    return true;
}

} // namespace

TEST(VerifyMc, FourCycleExamples)
{
    // Edge order: 01, 03, 12, 23.
    const Graph c4 = four_cycle();
    ASSERT_EQ(c4.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));

    // Class {01,12,23} contains both nonadjacent pairs {0,2} and {1,3}.
    const EdgeColoring path_plus_one(c4, {0, 1, 0, 0});
    EXPECT_TRUE(verify_mc(path_plus_one).ok());

    // Classes {01,12} and {23,30}: pair {1,3} has no monochromatic path.
    const EdgeColoring halves(c4, {0, 1, 0, 1});
    const McVerdict verdict = verify_mc(halves);
    ASSERT_FALSE(verdict.ok());
    EXPECT_EQ(*verdict.failing_pair, (Edge{1, 3}));
}

TEST(VerifyMc, CompleteGraphAllDistinct)
{
    for (int n = 2; n <= 8; ++n) {
        const Graph k = Graph::complete(n);
        std::vector<int> colors(static_cast<std::size_t>(k.size()));
        std::iota(colors.begin(), colors.end(), 0);
        EXPECT_TRUE(verify_mc(EdgeColoring(k, colors)).ok());
    }
}

TEST(VerifyMc, AgreesWithPathSearchOnRandomColorings)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 5 + trial % 2, 12);
        std::uniform_int_distribution<int> pick(0, 3);
        std::vector<int> colors(static_cast<std::size_t>(g.size()));
        for (int& c : colors)
            c = pick(rng);
        const EdgeColoring col(g, colors);
        ASSERT_EQ(verify_mc(col).ok(), brute_mc(col));
    }
}

TEST(VerifyMc, CoarseningPreservesMc)
{
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 6, 12);
        std::uniform_int_distribution<int> pick(0, 4);
        std::vector<int> colors(static_cast<std::size_t>(g.size()));
        for (int& c : colors)
            c = pick(rng);
        const EdgeColoring col(g, colors);
        if (!verify_mc(col).ok() || col.color_count() < 2)
            continue;
        std::uniform_int_distribution<int> which(0, col.color_count() - 1);
        const int a = which(rng);
        const int b = which(rng);
        std::vector<int> merged = col.colors();
        for (int& c : merged)
            if (c == b)
                c = a;
        ASSERT_TRUE(verify_mc(EdgeColoring(g, merged)).ok());
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(EdgeColoring, RejectsLengthMismatchAndRenumbers)
{
    const Graph c4 = four_cycle();
    EXPECT_THROW(EdgeColoring(c4, {0, 1, 2}), Error);
    EXPECT_THROW(EdgeColoring(c4, {0, 1, 2, -1}), Error);
    const EdgeColoring sparse_ids(c4, {7, 3, 7, 9});
    EXPECT_EQ(sparse_ids.colors(), (std::vector<int>{1, 0, 1, 2}));
    EXPECT_EQ(sparse_ids.canonical().colors(), (std::vector<int>{0, 1, 0, 2}));
}

TEST(EdgeColoring, CountAndWaste)
{
    const Graph k4 = Graph::complete(4);
    const EdgeColoring distinct(k4, {0, 1, 2, 3, 4, 5});
    EXPECT_EQ(color_count(distinct), 6);
    EXPECT_EQ(waste(distinct), 0);

    Graph c5(5);
    for (int v = 0; v < 5; ++v)
        c5.add_edge(v, (v + 1) % 5);
    const EdgeColoring mono(c5, std::vector<int>(5, 0));
    EXPECT_EQ(color_count(mono), 1);
    EXPECT_EQ(waste(mono), 4);

    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected_graphs(n)) {
            const EdgeColoring st = spanning_tree_coloring(g);
            ASSERT_EQ(st.color_count(), g.size() - n + 2);
            ASSERT_EQ(st.waste(), n - 2);
            int class_waste = 0;
            for (const ColorClass& c : st.classes())
                class_waste += c.waste;
            ASSERT_EQ(class_waste, st.waste());
        }
    }
}

TEST(ClassStructure, TreesSimpleAndSpanNonedges)
{
    const Graph k4 = Graph::complete(4);
    EXPECT_TRUE(classes_are_trees(spanning_tree_coloring(k4)));

    // Triangle 01,02,12 in one class inside K_4 (edge order 01,02,03,12,13,23).
    const EdgeColoring triangle(k4, {0, 0, 1, 0, 2, 3});
    EXPECT_FALSE(classes_are_trees(triangle));
    EXPECT_THROW(is_simple(triangle), Error);

    // Path 0-1-2 as one class spans only adjacent pairs of K_4.
    const EdgeColoring cherry(k4, {0, 0, 1, 2, 3, 4});
    EXPECT_TRUE(classes_are_trees(cherry));
    EXPECT_FALSE(classes_span_nonedges(cherry));

    const EdgeColoring trivial(k4, {0, 1, 2, 3, 4, 5});
    EXPECT_TRUE(is_simple(trivial));
    EXPECT_TRUE(classes_span_nonedges(trivial));

    // Stars at 0 and 1 over the shared leaves 2 and 3 (edges 02,03 | 12,13).
    Graph g(4);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    const EdgeColoring two_stars(g, {0, 0, 1, 1});
    EXPECT_TRUE(classes_are_trees(two_stars));
    EXPECT_FALSE(is_simple(two_stars));
}

TEST(ColoringJson, RoundTripAndReorderedEdges)
{
    const Graph c4 = four_cycle();
    const EdgeColoring col(c4, {0, 1, 0, 0});
    const nlohmann::json doc = coloring_to_json(col);
    EXPECT_EQ(doc.at("graph6"), "Cl");
    EXPECT_EQ(coloring_from_json(doc), col);

    const auto reordered = nlohmann::json::parse(R"({"graph6":"Cl","edges":[[3,2],[2,1],[3,0],[1,0]],"colors":[0,0,1,0]})");
    EXPECT_EQ(coloring_from_json(reordered), col);
}

TEST(ColoringJson, RejectsBadDocuments)
{
    const char* bad[] = {
        R"({"graph6":"Cl","edges":[[0,1],[1,2],[2,3]],"colors":[0,0,0]})",
        R"({"graph6":"Cl","edges":[[0,1],[1,2],[2,3],[0,2]],"colors":[0,0,0,0]})",
        R"({"graph6":"Cl","edges":[[0,1],[1,2],[2,3],[1,0]],"colors":[0,0,0,0]})",
        R"({"graph6":"Cl","edges":[[0,1],[1,2],[2,3],[0,3]],"colors":[0,0,0]})",
        R"({"graph6":"C","edges":[],"colors":[]})",
        R"({"edges":[],"colors":[]})",
    };
    for (const char* text : bad)
        EXPECT_THROW(coloring_from_json(nlohmann::json::parse(text)), Error) << text;
}
