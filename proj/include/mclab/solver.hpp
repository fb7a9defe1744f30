#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mclab/coloring.hpp"
#include "mclab/constructions.hpp"
#include "mclab/graph.hpp"
#include "mclab/metrics.hpp"

namespace mclab {

/// Largest order accepted by mc_exact. The pair and subset tables are 64-bit masks:
/// a connected graph on 12 vertices has at most C(11,2) = 55 nonadjacent pairs.
inline constexpr int kExactMaxOrder = 12;

enum class Method { fast_path, branch_and_bound, oracle };

inline std::string to_string(Method m)
{
    switch (m) {
    case Method::fast_path: return "fast-path";
    case Method::branch_and_bound: return "branch-and-bound";
    case Method::oracle: return "oracle";
    }
    return "unknown";
}

struct Bound {
    std::string name;
    long long value = 0;

    friend bool operator==(const Bound&, const Bound&) = default;
};

struct McCertificate {
    int value = 0;
    EdgeColoring coloring;
    Method method = Method::branch_and_bound;
    std::vector<Bound> bound_trace;
};

class ExactSolveRefused : public Error {
public:
    ExactSolveRefused(const std::string& what, std::vector<Bound> bounds) : Error(what), bounds_(std::move(bounds)) {}

    const std::vector<Bound>& bounds() const { return bounds_; }

private:
    std::vector<Bound> bounds_;
};

struct LowerBound {
    int value = 0;
    EdgeColoring coloring;
    std::string name;
};

/// Best of the spanning-tree coloring (m - n + 2) and the sparse-complement coloring.
inline LowerBound mc_lower_bound(const Graph& g)
{
    if (!is_connected(g))
        throw Error("mc_lower_bound needs a connected graph");
    EdgeColoring tree = spanning_tree_coloring(g);
    EdgeColoring sparse = sparse_complement_coloring(g);
    if (sparse.color_count() > tree.color_count())
        return {sparse.color_count(), std::move(sparse), "sparse-complement"};
    return {tree.color_count(), std::move(tree), "spanning-tree"};
}

/// Decides whether some vertex v of degree s admits a partition of V - v into V_1..V_s
/// with connected parts, complete bipartite joins between parts and exactly one
/// neighbor of v per part.
///
/// Two vertices in different parts are adjacent, so each component of the complement
/// of G - v lies inside one part. A component holding two neighbors of v rules v out;
/// the s components holding one neighbor each seed the parts, and the remaining
/// components are distributed over the parts exhaustively.
inline bool is_s_perfectly_connected(const Graph& g, int s)
{
    if (s < 1)
        return false;
    const Graph missing = complement(g);
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != s)
            continue;
        const auto comps = detail::components_within(missing, g.vertices() & ~singleton(v));
        std::vector<VertexSet> seeds;
        std::vector<VertexSet> loose;
        bool feasible = true;
        for (VertexSet c : comps) {
            const int hits = popcount(c & g.neighbors(v));
            if (hits > 1)
                feasible = false;
            (hits == 1 ? seeds : loose).push_back(c);
        }
        if (!feasible || static_cast<int>(seeds.size()) != s)
            continue;

        std::vector<VertexSet> parts = seeds;
        auto assign = [&](auto&& self, std::size_t i) -> bool {
            if (i == loose.size()) {
                return std::all_of(parts.begin(), parts.end(), [&](VertexSet p) { return connected_within(g, p); });
            }
            for (auto& part : parts) {
                part |= loose[i];
                const bool found = self(self, i + 1);
                part &= ~loose[i];
                if (found)
                    return true;
            }
            return false;
        };
        if (assign(assign, 0))
            return true;
    }
    return false;
}

/// Upper bounds on mc(G): m - n + chi; m - n + (kappa + 1) since G is never
/// (kappa+1)-connected; m - n + delta, or m - n + delta + 1 for delta-perfectly-connected
/// graphs; and m - t + 1 whenever m lies in the window
/// C(n-t,2) + t(n-t) <= m <= C(n-t,2) + t(n-t) + t - 2 for some 2 <= t <= n-1.
inline std::vector<Bound> mc_upper_bounds(const Graph& g)
{
    if (!is_connected(g))
        throw Error("mc_upper_bounds needs a connected graph");
    const long long n = g.order();
    const long long m = g.size();
    std::vector<Bound> out;
    out.push_back({"chromatic", m - n + chromatic_number(g)});
    out.push_back({"connectivity", m - n + vertex_connectivity(g) + 1});
    const int delta = min_degree(g);
    if (is_s_perfectly_connected(g, delta))
        out.push_back({"min-degree-perfect", m - n + delta + 1});
    else
        out.push_back({"min-degree", m - n + delta});
    for (long long t = 2; t <= n - 1; ++t) {
        const long long lo = choose2(n - t) + t * (n - t);
        if (lo <= m && m <= lo + t - 2)
            out.push_back({"waste-window-t" + std::to_string(t), m - t + 1});
    }
    return out;
}

inline long long min_upper_bound(const std::vector<Bound>& bounds)
{
    long long best = std::numeric_limits<long long>::max();
    for (const Bound& b : bounds)
        best = std::min(best, b.value);
    return best;
}

enum class TightCondition { complement_four_connected, triangle_free, degree_gap, diameter_three, cut_vertex };

inline std::string to_string(TightCondition c)
{
    switch (c) {
    case TightCondition::complement_four_connected: return "complement-4-connected";
    case TightCondition::triangle_free: return "triangle-free";
    case TightCondition::degree_gap: return "max-degree";
    case TightCondition::diameter_three: return "diameter";
    case TightCondition::cut_vertex: return "cut-vertex";
    }
    return "unknown";
}

struct FastPath {
    int value = 0;
    TightCondition reason = TightCondition::cut_vertex;
};

/// Sufficient conditions (n > 3) under which mc(G) = m - n + 2. Conditions are tested
/// cheapest first; the reported reason is the first one found.
inline std::optional<FastPath> tree_bound_fast_path(const Graph& g)
{
    const long long n = g.order();
    const long long m = g.size();
    if (n <= 3 || !is_connected(g))
        return std::nullopt;
    const int value = static_cast<int>(m - n + 2);
    if (has_cut_vertex(g))
        return FastPath{value, TightCondition::cut_vertex};
    if (is_triangle_free(g))
        return FastPath{value, TightCondition::triangle_free};
    if (diameter(g) >= 3)
        return FastPath{value, TightCondition::diameter_three};
    // Delta < n - (2m - 3(n-1)) / (n-3), cleared of the denominator.
    if (max_degree(g) * (n - 3) < n * (n - 3) - (2 * m - 3 * (n - 1)))
        return FastPath{value, TightCondition::degree_gap};
    if (n >= 5 && vertex_connectivity(complement(g)) >= 4)
        return FastPath{value, TightCondition::complement_four_connected};
    return std::nullopt;
}

namespace detail {

/// Smallest total waste W with W(W+1)/2 >= pairs: a tree wasting w colors spans w + 2
/// vertices, hence at most C(w+1,2) nonadjacent pairs, and C(., 2) is superadditive.
inline int convexity_lower_bound(int pairs)
{
    int w = 0;
    while (w * (w + 1) / 2 < pairs)
        ++w;
    return w;
}

/// Minimum-waste cover of the nonadjacent pairs by connected vertex sets. A set S
/// costs |S| - 2 (the waste of a spanning tree of G[S]). Two sets sharing two or more
/// vertices can be replaced by their union at no extra cost, so the optimum is attained
/// by sets pairwise meeting in at most one vertex, whose spanning trees are
/// edge-disjoint: the optimum equals the minimum waste of an MC-coloring with tree
/// classes.
class CoverSearch {
public:
    explicit CoverSearch(const Graph& g) : g_(g)
    {
        const int n = g.order();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v)) {
                    pair_id_[static_cast<std::size_t>(u * n + v)] = pair_count_;
                    pair_id_[static_cast<std::size_t>(v * n + u)] = pair_count_;
                    ++pair_count_;
                }
        if (pair_count_ > 64)
            throw Error("internal: more than 64 nonadjacent pairs");
        for (int r = 0; r <= 64; ++r)
            lb_[static_cast<std::size_t>(r)] = convexity_lower_bound(r);
        build_candidates();
    }

    int pair_count() const { return pair_count_; }

    /// Searches for a cover strictly cheaper than `incumbent`, stopping as soon as one
    /// with cost <= `good_enough` is found. Returns the best cover found, if any.
    std::optional<std::vector<VertexSet>> solve(int incumbent, int good_enough)
    {
        best_cost_ = incumbent;
        good_enough_ = good_enough;
        best_.reset();
        stop_ = false;
        chosen_.clear();
        const std::uint64_t all = pair_count_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pair_count_) - 1;
        if (pair_count_ == 0) {
            if (0 < best_cost_)
                best_ = std::vector<VertexSet>{};
            return best_;
        }
        search(all, 0);
        return best_;
    }

    std::size_t candidate_count() const { return candidates_.size(); }

private:
    struct Candidate {
        VertexSet set = 0;
        std::uint64_t cover = 0;
        int cost = 0;
    };

    void build_candidates()
    {
        const int n = g_.order();
        const std::size_t subsets = std::size_t{1} << n;
        std::vector<std::uint64_t> cover(subsets, 0);
        std::vector<Candidate> all;
        for (std::size_t s = 1; s < subsets; ++s) {
            const int top = 63 - std::countl_zero(static_cast<std::uint64_t>(s));
            const std::size_t rest = s & ~(std::size_t{1} << top);
            std::uint64_t c = cover[rest];
            for_each_bit(static_cast<VertexSet>(rest) & ~g_.neighbors(top),
                         [&](int u) { c |= std::uint64_t{1} << pair_id_[static_cast<std::size_t>(u * n + top)]; });
            cover[s] = c;
            const auto set = static_cast<VertexSet>(s);
            if (c == 0 || popcount(set) < 3 || !connected_within(g_, set))
                continue;
            all.push_back({set, c, popcount(set) - 2});
        }
        std::stable_sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
            if (a.cost != b.cost)
                return a.cost < b.cost;
            return popcount(a.cover) > popcount(b.cover);
        });
        // Drop sets whose pairs are all covered by a no-costlier kept set.
        for (const Candidate& c : all) {
            const bool dominated = std::any_of(candidates_.begin(), candidates_.end(), [&](const Candidate& d) {
                return d.cost <= c.cost && (c.cover & ~d.cover) == 0;
            });
            if (!dominated)
                candidates_.push_back(c);
        }
        by_pair_.assign(static_cast<std::size_t>(pair_count_), {});
        for (std::size_t i = 0; i < candidates_.size(); ++i)
            for_each_bit(candidates_[i].cover, [&](int p) { by_pair_[static_cast<std::size_t>(p)].push_back(static_cast<int>(i)); });
    }

    void search(std::uint64_t uncovered, int cost)
    {
        if (uncovered == 0) {
            if (cost < best_cost_) {
                best_cost_ = cost;
                best_.emplace();
                for (int i : chosen_)
                    best_->push_back(candidates_[static_cast<std::size_t>(i)].set);
                stop_ = cost <= good_enough_;
            }
            return;
        }
        if (cost + lb_[static_cast<std::size_t>(popcount(uncovered))] >= best_cost_)
            return;

        int pick = -1;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for_each_bit(uncovered, [&](int p) {
            const std::size_t options = by_pair_[static_cast<std::size_t>(p)].size();
            if (options < fewest) {
                fewest = options;
                pick = p;
            }
        });
        for (int i : by_pair_[static_cast<std::size_t>(pick)]) {
            const Candidate& c = candidates_[static_cast<std::size_t>(i)];
            const int next_cost = cost + c.cost;
            if (next_cost >= best_cost_)
                break;
            const std::uint64_t rest = uncovered & ~c.cover;
            if (next_cost + lb_[static_cast<std::size_t>(popcount(rest))] >= best_cost_)
                continue;
            chosen_.push_back(i);
            search(rest, next_cost);
            chosen_.pop_back();
            if (stop_)
                return;
        }
    }

    const Graph& g_;
    std::array<int, kMaxVertices * kMaxVertices> pair_id_{};
    int pair_count_ = 0;
    std::array<int, 65> lb_{};
    std::vector<Candidate> candidates_;
    std::vector<std::vector<int>> by_pair_;

    int best_cost_ = 0;
    int good_enough_ = 0;
    bool stop_ = false;
    std::vector<int> chosen_;
    std::optional<std::vector<VertexSet>> best_;
};

/// Merges sets sharing >= 2 vertices, then colors a BFS spanning tree of each set.
inline EdgeColoring coloring_from_cover(const Graph& g, std::vector<VertexSet> sets)
{
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < sets.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < sets.size() && !merged; ++j)
                if (popcount(sets[i] & sets[j]) >= 2) {
                    sets[i] |= sets[j];
                    sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
    }
    std::sort(sets.begin(), sets.end());
    std::vector<std::vector<Edge>> groups;
    for (VertexSet s : sets)
        groups.push_back(spanning_tree_within(g, s));
    return EdgeColoring::from_groups(g, groups);
}

} // namespace detail

struct SolveOptions {
    /// Use the tree-bound fast path and stop once the incumbent meets an upper bound.
    /// Disable to force a bound-independent branch-and-bound (regression checks).
    bool fast_paths = true;
};

/// Exact mc(G) = m - W*, W* the minimum total waste over tree families covering every
/// nonadjacent pair. Branch and bound over connected vertex sets, seeded with the
/// constructive lower bound and pruned by the convexity bound on remaining pairs.
inline McCertificate mc_exact(const Graph& g, SolveOptions options = {})
{
    if (!is_connected(g))
        throw Error("mc_exact needs a connected graph");
    const int m = g.size();

    LowerBound lower = mc_lower_bound(g);
    std::vector<Bound> trace{{"lower:" + lower.name, lower.value}};
    if (g.order() > kExactMaxOrder) {
        const std::vector<Bound> uppers = mc_upper_bounds(g);
        trace.insert(trace.end(), uppers.begin(), uppers.end());
        throw ExactSolveRefused("exact solve refused: n = " + std::to_string(g.order()) + " exceeds " +
                                    std::to_string(kExactMaxOrder),
                                trace);
    }
    if (options.fast_paths) {
        if (const auto fast = tree_bound_fast_path(g)) {
            trace.push_back({"tree-bound:" + to_string(fast->reason), fast->value});
            return {fast->value, spanning_tree_coloring(g), Method::fast_path, std::move(trace)};
        }
    }
    const std::vector<Bound> uppers = mc_upper_bounds(g);
    trace.insert(trace.end(), uppers.begin(), uppers.end());
    const long long upper = min_upper_bound(uppers);
    if (options.fast_paths && lower.value == upper)
        return {lower.value, std::move(lower.coloring), Method::fast_path, std::move(trace)};

    detail::CoverSearch search(g);
    const int good_enough = options.fast_paths ? static_cast<int>(m - upper) : 0;
    const auto cover = search.solve(m - lower.value, good_enough);
    if (!cover)
        return {lower.value, std::move(lower.coloring), Method::branch_and_bound, std::move(trace)};
    EdgeColoring col = detail::coloring_from_cover(g, *cover);
    const int value = col.color_count();
    return {value, std::move(col), Method::branch_and_bound, std::move(trace)};
}

/// Definition-level oracle: the most classes over all set partitions of E(G) whose
/// coloring joins every pair by a monochromatic path. Uses no structure theorems.
inline constexpr int kOracleMaxEdges = 12;

inline int mc_oracle_partitions(const Graph& g)
{
    const int m = g.size();
    if (!is_connected(g))
        throw Error("mc_oracle_partitions needs a connected graph");
    if (m > kOracleMaxEdges)
        throw Error("partition oracle limited to m <= 12, got " + std::to_string(m));
    const std::vector<Edge> edges = g.edges();
    std::vector<int> label(static_cast<std::size_t>(m), 0);
    int best = 0;
    // Restricted growth strings; a fresh class is tried first so that many-class
    // partitions are reached early, and a prefix is cut once it cannot beat `best`.
    auto walk = [&](auto&& self, int i, int classes) -> void {
        if (classes + (m - i) <= best)
            return;
        if (i == m) {
            if (!first_uncovered_pair(g, edges, label, classes))
                best = classes;
            return;
        }
        label[static_cast<std::size_t>(i)] = classes;
        self(self, i + 1, classes + 1);
        for (int c = classes - 1; c >= 0; --c) {
            label[static_cast<std::size_t>(i)] = c;
            self(self, i + 1, classes);
        }
    };
    walk(walk, 0, 0);
    return best;
}

} // namespace mclab
