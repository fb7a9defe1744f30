#pragma once

#include <string>

#include "mclab/graph.hpp"

namespace mclab {

enum class ExtremalFunction { f, g, t, s };

inline std::string to_string(ExtremalFunction fn)
{
    switch (fn) {
    case ExtremalFunction::f: return "f";
    case ExtremalFunction::g: return "g";
    case ExtremalFunction::t: return "t";
    case ExtremalFunction::s: return "s";
    }
    return "?";
}

/// f(n,k): least m such that every connected n-vertex graph with >= m edges has mc >= k.
/// g(n,k): greatest m such that every connected n-vertex graph with <= m edges has mc <= k.
/// t(n,k): fewest edges of a connected graph with mc >= k.
/// s(n,k): most edges of a connected graph with mc <= k.
struct FormulaResult {
    ExtremalFunction function = ExtremalFunction::f;
    int n = 0;
    long long k = 0;
    long long value = 0;
    std::string regime;
};

namespace detail {

inline void check_domain(const char* name, int n, long long k)
{
    if (n < 2 || n > 100000)
        throw Error(std::string(name) + ": n = " + std::to_string(n) + " out of range");
    if (k < 1 || k > choose2(n))
        throw Error(std::string(name) + ": k = " + std::to_string(k) + " outside [1, C(n,2)]");
}

/// Exact ceiling of num / den for den > 0, rounding toward +infinity.
inline long long ceil_div(long long num, long long den)
{
    const long long q = num / den;
    return (num % den != 0 && num > 0) ? q + 1 : q;
}

} // namespace detail

inline FormulaResult f_value(int n, long long k)
{
    detail::check_domain("f", n, k);
    const long long c = choose2(n);
    FormulaResult r{ExtremalFunction::f, n, k, 0, {}};
    if (k <= c - 2LL * n + 4) {
        r.value = n + k - 2;
        r.regime = "linear";
    } else {
        r.value = c + detail::ceil_div(k - c, 2);
        r.regime = "half-step";
    }
    return r;
}

/// Window of k for split parameter t: [C(n-t,2) + t(n-t-1) + 1, C(n-t,2) + t(n-t)].
struct GWindow {
    long long lo = 0;
    long long hi = 0;
};

inline GWindow g_window(int n, int t)
{
    const long long base = choose2(n - t);
    return {base + static_cast<long long>(t) * (n - t - 1) + 1, base + static_cast<long long>(t) * (n - t)};
}

inline FormulaResult g_value(int n, long long k)
{
    detail::check_domain("g", n, k);
    const long long c = choose2(n);
    FormulaResult r{ExtremalFunction::g, n, k, 0, {}};
    if (k == c) {
        r.value = c;
        r.regime = "complete";
        return r;
    }
    int hits = 0;
    for (int t = 2; t <= n - 1; ++t) {
        const GWindow w = g_window(n, t);
        if (k < w.lo || k > w.hi)
            continue;
        ++hits;
        if (k == w.hi) {
            r.value = k + t - 2;
            r.regime = "window-t" + std::to_string(t) + "-end";
        } else {
            r.value = k + t - 1;
            r.regime = "window-t" + std::to_string(t) + "-inner";
        }
    }
    if (hits != 1)
        throw Error("g(" + std::to_string(n) + "," + std::to_string(k) + "): k lies in " + std::to_string(hits) +
                    " windows, expected exactly one");
    return r;
}

/// t(n,k) = g(n,k-1) + 1 for k >= 2; t(n,1) = n - 1 (a spanning tree already has mc >= 1).
inline FormulaResult t_min_edges(int n, long long k)
{
    detail::check_domain("t", n, k);
    FormulaResult r{ExtremalFunction::t, n, k, 0, {}};
    if (k == 1) {
        r.value = n - 1;
        r.regime = "spanning-tree";
        return r;
    }
    const FormulaResult g = g_value(n, k - 1);
    r.value = g.value + 1;
    r.regime = "g+1:" + g.regime;
    return r;
}

/// s(n,k) = f(n,k+1) - 1 for k < C(n,2); s(n,C(n,2)) = C(n,2).
inline FormulaResult s_max_edges(int n, long long k)
{
    detail::check_domain("s", n, k);
    FormulaResult r{ExtremalFunction::s, n, k, 0, {}};
    if (k == choose2(n)) {
        r.value = k;
        r.regime = "complete";
        return r;
    }
    const FormulaResult f = f_value(n, k + 1);
    r.value = f.value - 1;
    r.regime = "f-1:" + f.regime;
    return r;
}

inline FormulaResult evaluate(ExtremalFunction fn, int n, long long k)
{
    switch (fn) {
    case ExtremalFunction::f: return f_value(n, k);
    case ExtremalFunction::g: return g_value(n, k);
    case ExtremalFunction::t: return t_min_edges(n, k);
    case ExtremalFunction::s: return s_max_edges(n, k);
    }
    throw Error("unknown extremal function");
}

} // namespace mclab
