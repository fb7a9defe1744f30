#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mclab/enumerate.hpp"
#include "mclab/formulas.hpp"
#include "mclab/graph6.hpp"
#include "mclab/solver.hpp"

namespace mclab {

/// Default ceiling for exhaustive certification. MC_LAB_HARD_CAP raises it up to the
/// enumeration limit; orders above 7 are unsupported territory.
inline constexpr int kDefaultCertifyMaxOrder = 7;

inline int certify_max_order()
{
    if (const char* env = std::getenv("MC_LAB_HARD_CAP")) {
        const int cap = std::atoi(env);
        if (cap >= 2)
            return std::min(cap, kMaxEnumerationOrder);
    }
    return kDefaultCertifyMaxOrder;
}

/// Extremes of mc over connected labeled graphs with a fixed edge count. Witnesses are
/// the lexicographically smallest graph6 strings attaining the extreme.
struct EdgeCountStats {
    int m = 0;
    std::size_t graphs = 0;
    int min_mc = std::numeric_limits<int>::max();
    int max_mc = std::numeric_limits<int>::min();
    std::string min_witness;
    std::string max_witness;

    void add(int mc, const std::string& g6)
    {
        ++graphs;
        if (mc < min_mc || (mc == min_mc && g6 < min_witness)) {
            min_mc = mc;
            min_witness = g6;
        }
        if (mc > max_mc || (mc == max_mc && g6 < max_witness)) {
            max_mc = mc;
            max_witness = g6;
        }
    }

    void merge(const EdgeCountStats& other)
    {
        if (other.graphs == 0)
            return;
        graphs += other.graphs;
        if (other.min_mc < min_mc || (other.min_mc == min_mc && other.min_witness < min_witness)) {
            min_mc = other.min_mc;
            min_witness = other.min_witness;
        }
        if (other.max_mc > max_mc || (other.max_mc == max_mc && other.max_witness < max_witness)) {
            max_mc = other.max_mc;
            max_witness = other.max_witness;
        }
    }
};

struct SweepResult {
    int n = 0;
    int jobs = 1;
    std::vector<EdgeCountStats> by_edges; // index m = 0..C(n,2)
    std::size_t graphs = 0;
    std::size_t fast_path = 0;
    std::size_t branch_and_bound = 0;
    double seconds = 0.0;
};

inline void check_certify_order(int n)
{
    if (n < 2 || n > certify_max_order())
        throw Error("certification supports 2 <= n <= " + std::to_string(certify_max_order()) + ", got " +
                    std::to_string(n));
}

/// Exact mc of every connected labeled graph on n vertices, reduced per edge count.
/// The mask range is split into `jobs` contiguous slices; the merge is order independent.
inline SweepResult sweep(int n, int jobs = 1)
{
    check_certify_order(n);
    jobs = std::max(1, jobs);
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t total = ConnectedGraphStream::mask_count(n);
    const int edges_max = static_cast<int>(choose2(n));

    std::vector<SweepResult> partial(static_cast<std::size_t>(jobs));
    auto work = [&](int w) {
        SweepResult& out = partial[static_cast<std::size_t>(w)];
        out.by_edges.resize(static_cast<std::size_t>(edges_max + 1));
        const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(jobs);
        const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(jobs);
        ConnectedGraphStream stream(n, std::nullopt, lo, hi);
        while (auto g = stream.next()) {
            const McCertificate cert = mc_exact(*g);
            out.by_edges[static_cast<std::size_t>(g->size())].add(cert.value, emit_graph6(*g));
            ++out.graphs;
            ++(cert.method == Method::fast_path ? out.fast_path : out.branch_and_bound);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back(work, w);
    }

    SweepResult result;
    result.n = n;
    result.jobs = jobs;
    result.by_edges.resize(static_cast<std::size_t>(edges_max + 1));
    for (int m = 0; m <= edges_max; ++m)
        result.by_edges[static_cast<std::size_t>(m)].m = m;
    for (const SweepResult& p : partial) {
        for (int m = 0; m <= edges_max; ++m)
            result.by_edges[static_cast<std::size_t>(m)].merge(p.by_edges[static_cast<std::size_t>(m)]);
        result.graphs += p.graphs;
        result.fast_path += p.fast_path;
        result.branch_and_bound += p.branch_and_bound;
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

/// Entry k-1 holds f_emp(n,k): the least F >= n-1 with min-mc(m) >= k for every m >= F.
inline std::vector<long long> empirical_f(const SweepResult& sw)
{
    const int n = sw.n;
    const long long c = choose2(n);
    std::vector<long long> out;
    for (long long k = 1; k <= c; ++k) {
        long long f = n - 1;
        for (long long m = n - 1; m <= c; ++m)
            if (sw.by_edges[static_cast<std::size_t>(m)].min_mc < k)
                f = m + 1;
        out.push_back(f);
    }
    return out;
}

/// Entry k-1 holds g_emp(n,k): (least m with max-mc(m) >= k+1) - 1, or C(n,2).
inline std::vector<long long> empirical_g(const SweepResult& sw)
{
    const int n = sw.n;
    const long long c = choose2(n);
    std::vector<long long> out;
    for (long long k = 1; k <= c; ++k) {
        long long g = c;
        for (long long m = n - 1; m <= c; ++m)
            if (sw.by_edges[static_cast<std::size_t>(m)].max_mc >= k + 1) {
                g = m - 1;
                break;
            }
        out.push_back(g);
    }
    return out;
}

inline std::vector<long long> empirical_f(int n, int jobs = 1) { return empirical_f(sweep(n, jobs)); }
inline std::vector<long long> empirical_g(int n, int jobs = 1) { return empirical_g(sweep(n, jobs)); }

struct Witness {
    ExtremalFunction function = ExtremalFunction::f;
    long long k = 0;
    int m = 0;
    int mc = 0;
    std::string graph6;
};

struct CertificationReport {
    int n = 0;
    SweepResult sweep;
    std::vector<long long> f_formula;
    std::vector<long long> f_empirical;
    std::vector<long long> g_formula;
    std::vector<long long> g_empirical;
    std::vector<std::string> mismatches;
    std::vector<Witness> witnesses;

    bool certified() const { return mismatches.empty(); }
};

inline CertificationReport certify(const SweepResult& sw)
{
    CertificationReport r;
    r.n = sw.n;
    r.sweep = sw;
    r.f_empirical = empirical_f(sw);
    r.g_empirical = empirical_g(sw);
    const int n = sw.n;
    const long long c = choose2(n);
    for (long long k = 1; k <= c; ++k) {
        const auto i = static_cast<std::size_t>(k - 1);
        r.f_formula.push_back(f_value(n, k).value);
        r.g_formula.push_back(g_value(n, k).value);
        if (r.f_formula[i] != r.f_empirical[i])
            r.mismatches.push_back("f(" + std::to_string(n) + "," + std::to_string(k) + "): formula " +
                                   std::to_string(r.f_formula[i]) + ", empirical " + std::to_string(r.f_empirical[i]));
        if (r.g_formula[i] != r.g_empirical[i])
            r.mismatches.push_back("g(" + std::to_string(n) + "," + std::to_string(k) + "): formula " +
                                   std::to_string(r.g_formula[i]) + ", empirical " + std::to_string(r.g_empirical[i]));

        const long long below = r.f_formula[i] - 1;
        if (below >= n - 1) {
            const EdgeCountStats& st = sw.by_edges[static_cast<std::size_t>(below)];
            if (st.min_mc < k)
                r.witnesses.push_back({ExtremalFunction::f, k, static_cast<int>(below), st.min_mc, st.min_witness});
        }
        const long long above = r.g_formula[i] + 1;
        if (above <= c) {
            const EdgeCountStats& st = sw.by_edges[static_cast<std::size_t>(above)];
            if (st.max_mc > k)
                r.witnesses.push_back({ExtremalFunction::g, k, static_cast<int>(above), st.max_mc, st.max_witness});
        }
    }
    return r;
}

inline CertificationReport certify(int n, int jobs = 1) { return certify(sweep(n, jobs)); }

inline nlohmann::json report_to_json(const CertificationReport& r)
{
    nlohmann::json per_m = nlohmann::json::array();
    for (const EdgeCountStats& st : r.sweep.by_edges) {
        if (st.graphs == 0)
            continue;
        per_m.push_back({{"m", st.m},
                         {"graphs", st.graphs},
                         {"min_mc", st.min_mc},
                         {"max_mc", st.max_mc},
                         {"min_witness", st.min_witness},
                         {"max_witness", st.max_witness}});
    }
    nlohmann::json witnesses = nlohmann::json::array();
    for (const Witness& w : r.witnesses)
        witnesses.push_back(
            {{"function", to_string(w.function)}, {"k", w.k}, {"m", w.m}, {"mc", w.mc}, {"graph6", w.graph6}});
    return {{"n", r.n},
            {"verdict", r.certified() ? "certified" : "mismatch"},
            {"graphs", r.sweep.graphs},
            {"per_m", std::move(per_m)},
            {"f", {{"formula", r.f_formula}, {"empirical", r.f_empirical}}},
            {"g", {{"formula", r.g_formula}, {"empirical", r.g_empirical}}},
            {"mismatches", r.mismatches},
            {"witnesses", std::move(witnesses)},
            {"timing",
             {{"seconds", r.sweep.seconds},
              {"jobs", r.sweep.jobs},
              {"fast_path", r.sweep.fast_path},
              {"branch_and_bound", r.sweep.branch_and_bound}}}};
}

/// One row per k: n,k,f_formula,f_empirical,g_formula,g_empirical,f_witness,g_witness.
inline std::string report_to_csv(const CertificationReport& r)
{
    std::ostringstream out;
    out << "n,k,f_formula,f_empirical,g_formula,g_empirical,f_witness,g_witness\n";
    for (std::size_t i = 0; i < r.f_formula.size(); ++i) {
        const long long k = static_cast<long long>(i) + 1;
        std::string fw;
        std::string gw;
        for (const Witness& w : r.witnesses) {
            if (w.k != k)
                continue;
            (w.function == ExtremalFunction::f ? fw : gw) = w.graph6;
        }
        out << r.n << ',' << k << ',' << r.f_formula[i] << ',' << r.f_empirical[i] << ',' << r.g_formula[i] << ','
            << r.g_empirical[i] << ',' << fw << ',' << gw << '\n';
    }
    return out.str();
}

} // namespace mclab
