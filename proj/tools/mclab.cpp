// mclab: compute, verify, construct, tabulate and certify monochromatic connection numbers.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification failure or mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mclab/mclab.hpp"

using namespace mclab;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

json compute_one(const Graph& g, const std::string& method)
{
    if (!is_connected(g))
        throw Error("graph is disconnected");
    if (method == "exact")
        return certificate_to_json(mc_exact(g));

    const LowerBound lower = mc_lower_bound(g);
    if (method == "fast") {
        json out{{"graph6", emit_graph6(g)}, {"method", to_string(Method::fast_path)}};
        if (const auto fast = tree_bound_fast_path(g)) {
            out["mc"] = fast->value;
            out["reason"] = to_string(fast->reason);
            out["coloring"] = coloring_to_json(spanning_tree_coloring(g));
        } else {
            out["mc"] = nullptr;
        }
        return out;
    }
    const std::vector<Bound> uppers = mc_upper_bounds(g);
    std::vector<Bound> trace{{"lower:" + lower.name, lower.value}};
    trace.insert(trace.end(), uppers.begin(), uppers.end());
    return {{"graph6", emit_graph6(g)},
            {"lower", lower.value},
            {"upper", min_upper_bound(uppers)},
            {"bounds", bounds_to_json(trace)},
            {"coloring", coloring_to_json(lower.coloring)}};
}

int run_compute(const std::optional<std::string>& graph, const std::string& method)
{
    std::vector<std::string> inputs;
    if (graph) {
        inputs.push_back(*graph);
    } else {
        for (std::string line; std::getline(std::cin, line);)
            if (!trim(line).empty())
                inputs.push_back(trim(line));
    }
    if (inputs.empty()) {
        std::cerr << "compute: no graph6 input\n";
        return kExitUsage;
    }
    int status = 0;
    for (const std::string& text : inputs) {
        try {
            std::cout << compute_one(parse_graph6(text), method).dump() << '\n';
        } catch (const ExactSolveRefused& e) {
            std::cout << json{{"graph6", text}, {"mc", nullptr}, {"error", e.what()}, {"bounds", bounds_to_json(e.bounds())}}.dump()
                      << '\n';
            status = kExitUsage;
        } catch (const Graph6Error& e) {
            std::cerr << "compute: " << text << ": " << e.what() << '\n';
            status = kExitUsage;
        } catch (const Error& e) {
            std::cerr << "compute: " << text << ": " << e.what() << '\n';
            status = kExitUsage;
        }
    }
    return status;
}

int run_verify(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "verify: cannot open " << path << '\n';
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    EdgeColoring col = [&] {
        try {
            const json doc = json::parse(buffer.str());
            // A certificate from `compute` nests its coloring.
            return coloring_from_json(doc.contains("coloring") ? doc.at("coloring") : doc);
        } catch (const json::parse_error& e) {
            std::cerr << "verify: " << e.what() << '\n';
            std::exit(kExitUsage);
        } catch (const Error& e) {
            std::cerr << "verify: " << e.what() << '\n';
            std::exit(kExitUsage);
        }
    }();
    const McVerdict verdict = verify_mc(col);
    if (verdict.ok()) {
        std::cout << "ok " << col.color_count() << " colors\n";
        return 0;
    }
    std::cout << "fail " << verdict.failing_pair->u << ' ' << verdict.failing_pair->v << '\n';
    return kExitFailed;
}

void print_colored(const Graph& g, const EdgeColoring& col)
{
    std::cout << emit_graph6(g) << '\n' << coloring_to_json(col).dump() << '\n';
}

int run_construct(const std::string& family, int n, int t, int extra, const std::vector<int>& sizes)
{
    if (family == "gnt") {
        const PartitionedGraph pg = detached_class_graph(n, t);
        print_colored(pg.graph, detached_class_coloring(pg));
    } else if (family == "lemma5") {
        const ColoredGraph cg = window_sharp_graph(n, t, extra);
        print_colored(cg.graph, cg.coloring);
    } else if (family == "thm3h") {
        const Graph g = diameter_three_graph(n);
        print_colored(g, spanning_tree_coloring(g));
    } else if (family == "thm3t2") {
        const Graph g = lone_degree_two_graph(n);
        print_colored(g, spanning_tree_coloring(g));
    } else {
        const PartitionedGraph pg = complete_multipartite(sizes);
        print_colored(pg.graph, multipartite_star_coloring(pg));
    }
    return 0;
}

int run_table(const std::string& fn, int n)
{
    const ExtremalFunction which = fn == "f"   ? ExtremalFunction::f
                                   : fn == "g" ? ExtremalFunction::g
                                   : fn == "t" ? ExtremalFunction::t
                                               : ExtremalFunction::s;
    const long long c = choose2(n);
    std::cout << "n,k,value,regime\n";
    for (long long k = 1; k <= c; ++k) {
        const FormulaResult r = evaluate(which, n, k);
        std::cout << n << ',' << k << ',' << r.value << ',' << r.regime << '\n';
    }
    return 0;
}

int run_certify(int n, int jobs, const std::string& format, bool allow_n7)
{
    if (n >= 7 && !allow_n7 && !std::getenv("MC_LAB_HARD_CAP")) {
        std::cerr << "certify: n >= 7 needs --allow-n7 (2,097,152 masks at n = 7)\n";
        return kExitUsage;
    }
    const CertificationReport report = certify(n, jobs);
    if (format == "csv")
        std::cout << report_to_csv(report);
    else
        std::cout << report_to_json(report).dump(2) << '\n';
    for (const std::string& m : report.mismatches)
        std::cerr << "mismatch: " << m << '\n';
    return report.certified() ? 0 : kExitFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monochromatic connection numbers of small graphs"};
    app.require_subcommand(1);

    std::optional<std::string> graph;
    std::string method = "exact";
    auto* compute = app.add_subcommand("compute", "certificate JSON for graph6 input (--graph or stdin lines)");
    compute->add_option("--graph", graph, "graph6 string");
    compute->add_option("--method", method, "exact, bounds or fast")
        ->check(CLI::IsMember({"exact", "bounds", "fast"}));

    std::string coloring_path;
    auto* verify = app.add_subcommand("verify", "check a coloring JSON file");
    verify->add_option("coloring", coloring_path, "coloring or certificate JSON file")->required();

    std::string family;
    int n = 0;
    int t = 0;
    int extra = 0;
    std::vector<int> sizes;
    auto* construct = app.add_subcommand("construct", "print an extremal graph and its coloring");
    construct->add_option("family", family, "gnt, lemma5, thm3h, thm3t2 or multipartite")
        ->required()
        ->check(CLI::IsMember({"gnt", "lemma5", "thm3h", "thm3t2", "multipartite"}));
    construct->add_option("--n", n, "order");
    construct->add_option("--t", t, "class count or window parameter");
    construct->add_option("--extra", extra, "extra edges inside the large class (lemma5)");
    construct->add_option("--sizes", sizes, "part sizes (multipartite)")->delimiter(',');

    std::string function;
    int table_n = 0;
    auto* table = app.add_subcommand("table", "closed-form values as CSV");
    table->add_option("function", function, "f, g, t or s")->required()->check(CLI::IsMember({"f", "g", "t", "s"}));
    table->add_option("--n", table_n, "order")->required();

    int certify_n = 0;
    int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    std::string format = "json";
    bool allow_n7 = false;
    auto* cert = app.add_subcommand("certify", "compare closed forms with an exhaustive sweep");
    cert->add_option("--n", certify_n, "order")->required();
    cert->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    cert->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cert->add_flag("--allow-n7", allow_n7, "permit the n = 7 sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*compute)
            return run_compute(graph, method);
        if (*verify)
            return run_verify(coloring_path);
        if (*construct)
            return run_construct(family, n, t, extra, sizes);
        if (*table)
            return run_table(function, table_n);
        return run_certify(certify_n, jobs, format, allow_n7);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
