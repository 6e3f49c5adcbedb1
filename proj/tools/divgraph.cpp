// Command-line front end: build and export divisibility graphs for S_n/A_n
// or user-supplied integer sets, run the claim verifiers, and sweep ranges.
//
// Exit codes: 0 success/pass, 1 verifier fail, 2 usage or input error,
// 3 capacity exceeded.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "divgraph/class_sizes.hpp"
#include "divgraph/errors.hpp"
#include "divgraph/export_fmt.hpp"
#include "divgraph/graphs.hpp"
#include "divgraph/oracle.hpp"
#include "divgraph/theorems.hpp"

namespace {

using namespace divgraph;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

constexpr unsigned kDefaultMaxBuildN = 40;
constexpr unsigned kDefaultMaxDiameterN = 25;

unsigned thread_count() {
    if (const char* env = std::getenv("DIVGRAPH_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

GraphKind parse_kind(const std::string& s) {
    if (s == "D") return GraphKind::D;
    if (s == "Gamma") return GraphKind::Gamma;
    if (s == "Delta") return GraphKind::Delta;
    if (s == "B") return GraphKind::B;
    throw CLI::ValidationError("--kind", "unknown graph kind: " + s);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::string render_graph(const GraphMeta& meta, const SizeSet& x, const UGraph& g,
                         const ComponentReport& rep, const std::string& format) {
    if (format == "json")
        return graph_to_json(meta, x, g, rep).dump(2) + "\n";
    if (format == "dot")
        return graph_to_dot(meta, x, g, rep);
    if (format == "csv")
        return graph_to_csv(g);
    if (format == "text")
        return graph_to_text(meta, x, g, rep);
    throw CLI::ValidationError("--format", "unknown format: " + format);
}

struct BuildOptions {
    std::string group = "S";
    unsigned n = 0;
    std::string kind = "D";
    std::string format = "json";
    std::string out;
    unsigned max_build_n = kDefaultMaxBuildN;
    unsigned max_diameter_n = kDefaultMaxDiameterN;
};

int run_build(const BuildOptions& opt) {
    if (opt.n > opt.max_build_n)
        throw capacity_error("n=" + std::to_string(opt.n) + " exceeds build budget " +
                             std::to_string(opt.max_build_n) +
                             " (override with --max-build-n)");
    if (opt.max_build_n > kDefaultMaxBuildN)
        std::cerr << "warning: build budget raised above " << kDefaultMaxBuildN
                  << "; the pairwise divisibility pass is quadratic in p(n)\n";
    SizeSet x = opt.group == "A" ? size_set_alt(opt.n) : size_set_sym(opt.n);
    UGraph g = build_graph(x, parse_kind(opt.kind));
    ComponentReport rep = components(g, opt.n <= opt.max_diameter_n);
    GraphMeta meta{opt.n, opt.group, parse_kind(opt.kind)};
    write_output(opt.out, render_graph(meta, x, g, rep, opt.format));
    return kExitPass;
}

struct FromFileOptions {
    std::string path;
    std::string kind = "D";
    std::string format = "json";
    std::string out;
};

int run_fromfile(const FromFileOptions& opt) {
    std::ifstream in(opt.path);
    if (!in) {
        std::cerr << "error: cannot read " << opt.path << "\n";
        return kExitUsage;
    }
    std::vector<FactoredNat> values;
    std::string line;
    unsigned line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // strip surrounding whitespace; blank lines are allowed
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos)
            continue;
        auto end = line.find_last_not_of(" \t\r");
        std::string token = line.substr(begin, end - begin + 1);
        BigInt v;
        try {
            v = BigInt(token);
        } catch (const std::exception&) {
            std::cerr << "error: line " << line_no << ": not a positive integer: '"
                      << token << "'\n";
            return kExitUsage;
        }
        if (v <= 0) {
            std::cerr << "error: line " << line_no << ": not a positive integer: '"
                      << token << "'\n";
            return kExitUsage;
        }
        if (v == 1)
            continue;
        auto factored = FactoredNat::try_factor(v, 1000000);
        if (!factored) {
            std::cerr << "error: line " << line_no << ": unsupported input: " << token
                      << " has a prime factor above 10^6\n";
            return kExitUsage;
        }
        values.push_back(std::move(*factored));
    }
    SizeSet x = size_set_from_values(std::move(values));
    UGraph g = build_graph(x, parse_kind(opt.kind));
    ComponentReport rep = components(g);
    GraphMeta meta{0, "X", parse_kind(opt.kind)};
    write_output(opt.out, render_graph(meta, x, g, rep, opt.format));
    return kExitPass;
}

struct VerifyOptions {
    std::string claim;
    unsigned from = 0, to = 0; // 0 = use claim defaults
    unsigned max_n = 0;
    std::string format = "text";
    std::string out;
    unsigned max_diameter_n = kDefaultMaxDiameterN;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<VerdictReport> reports;
    auto sweep = [&](unsigned lo_default, unsigned hi_default, auto&& fn) {
        unsigned lo = opt.from ? opt.from : lo_default;
        unsigned hi = opt.to ? opt.to : hi_default;
        for (unsigned n = lo; n <= hi; ++n)
            reports.push_back(fn(n));
    };

    const std::string& claim = opt.claim;
    if (claim == "lemma2") {
        sweep(1, opt.max_n ? opt.max_n : 25, [](unsigned x) { return verify_lemma2(x); });
    } else if (claim == "lemma8") {
        sweep(7, 40, [](unsigned n) { return verify_lemma8(n); });
    } else if (claim == "lemma11") {
        sweep(9, 40, [](unsigned n) { return verify_lemma11(n); });
    } else if (claim == "theorem9") {
        sweep(7, 40, [](unsigned n) { return verify_theorem9(n); });
    } else if (claim == "theorem13") {
        sweep(9, 40, [](unsigned n) { return verify_theorem13(n); });
    } else if (claim == "corollary2") {
        sweep(3, 40, [](unsigned n) { return verify_corollary2(n); });
    } else if (claim == "corollary14") {
        sweep(4, 40, [](unsigned n) { return verify_corollary14(n); });
    } else if (claim == "lemmas14-15") {
        sweep(9, 20, [](unsigned n) { return verify_lemmas_14_15(n); });
    } else if (claim == "figures") {
        reports.push_back(reproduce_figures());
    } else if (claim == "diameter-bounds") {
        unsigned hi = opt.to ? opt.to : opt.max_diameter_n;
        if (hi > opt.max_diameter_n)
            throw capacity_error("diameter budget is n <= " +
                                 std::to_string(opt.max_diameter_n) +
                                 " (override with --max-diameter-n)");
        sweep(1, hi, [](unsigned n) { return diameter_bounds(n, false); });
        sweep(1, hi, [](unsigned n) { return diameter_bounds(n, true); });
    } else if (claim == "conjecture") {
        unsigned hi = opt.to ? opt.to : opt.max_diameter_n;
        if (hi > opt.max_diameter_n)
            throw capacity_error("diameter budget is n <= " +
                                 std::to_string(opt.max_diameter_n));
        reports.push_back(conjecture_sweep(hi, false));
        reports.push_back(conjecture_sweep(hi, true));
    } else if (claim == "power-adjacency") {
        sweep(1, 20, [](unsigned n) { return verify_power_adjacency(n); });
    } else if (claim == "oracle") {
        unsigned cap = opt.max_n ? opt.max_n : oracle::kMaxTallyDegree;
        reports.push_back(
            verify_oracle(std::min(cap, oracle::kMaxTallyDegree),
                          std::min(cap, oracle::kMaxOrbitDegree)));
    } else {
        throw CLI::ValidationError("claim", "unknown claim: " + claim);
    }

    std::ostringstream os;
    bool any_fail = false;
    for (const auto& rep : reports) {
        any_fail = any_fail || rep.verdict == Verdict::fail;
        if (opt.format == "json")
            os << verdict_to_json(rep).dump() << "\n";
        else
            os << verdict_to_text(rep) << "\n";
    }
    if (opt.format != "json") {
        os << (any_fail ? "RESULT: FAIL" : "RESULT: PASS") << " (" << reports.size()
           << " report" << (reports.size() == 1 ? "" : "s") << ")\n";
    }
    write_output(opt.out, os.str());
    return any_fail ? kExitFail : kExitPass;
}

struct SweepOptions {
    std::string group = "S";
    unsigned from = 3, to = 12;
    std::string out;
    unsigned max_build_n = kDefaultMaxBuildN;
    unsigned max_diameter_n = kDefaultMaxDiameterN;
};

int run_sweep(const SweepOptions& opt) {
    if (opt.to > opt.max_build_n)
        throw capacity_error("sweep ceiling exceeds build budget " +
                             std::to_string(opt.max_build_n));
    struct Row {
        unsigned n;
        std::string csv;
    };
    std::vector<unsigned> ns;
    for (unsigned n = opt.from; n <= opt.to; ++n)
        ns.push_back(n);
    std::vector<std::string> rows(ns.size());

    auto worker_body = [&](unsigned n) {
        auto start = std::chrono::steady_clock::now();
        SizeSet x = opt.group == "A" ? size_set_alt(n) : size_set_sym(n);
        ConnectivityScan scan = scan_D(x);
        bool in_diam_budget = n <= opt.max_diameter_n;
        int diameter = -1;
        if (in_diam_budget)
            diameter = components(build_D(x)).overall_diameter;
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        std::vector<int> sizes = scan.component_sizes;
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        std::ostringstream comp_sizes;
        for (std::size_t i = 0; i < sizes.size(); ++i)
            comp_sizes << (i ? "+" : "") << sizes[i];
        std::ostringstream row;
        row << n << ',' << opt.group << ',' << x.size() << ',' << scan.edge_count << ','
            << scan.component_count << ',' << comp_sizes.str() << ',';
        if (in_diam_budget)
            row << diameter;
        row << ',' << static_cast<long long>(ms);
        return row.str();
    };

    // Rows are independent; farm them out but emit in order of n.
    unsigned workers = std::min<unsigned>(thread_count(), std::max<std::size_t>(ns.size(), 1));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < ns.size(); i = next.fetch_add(1))
                rows[i] = worker_body(ns[i]);
        });
    for (auto& t : pool)
        t.join();

    std::ostringstream os;
    os << "n,group,vertices,edges,components,component_sizes,diameter,wall_ms\n";
    for (const auto& row : rows)
        os << row << "\n";
    write_output(opt.out, os.str());
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Divisibility graphs of conjugacy class sizes for S_n and A_n"};
    app.require_subcommand(1);

    BuildOptions build_opt;
    auto* build = app.add_subcommand("build", "Build one graph and export it");
    build->add_option("--group", build_opt.group, "Group family: S or A")
        ->check(CLI::IsMember({"S", "A"}));
    build->add_option("--n", build_opt.n, "Degree n")->required();
    build->add_option("--kind", build_opt.kind, "Graph kind: D, Gamma, Delta or B")
        ->check(CLI::IsMember({"D", "Gamma", "Delta", "B"}));
    build->add_option("--format", build_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "csv", "text"}));
    build->add_option("--out", build_opt.out, "Output path (default stdout)");
    build->add_option("--max-build-n", build_opt.max_build_n, "Build budget override");
    build->add_option("--max-diameter-n", build_opt.max_diameter_n,
                      "Diameter budget override");

    FromFileOptions file_opt;
    auto* fromfile =
        app.add_subcommand("fromfile", "Build a graph from a file of integers");
    fromfile->add_option("path", file_opt.path, "Input file, one integer per line")
        ->required();
    fromfile->add_option("--kind", file_opt.kind, "Graph kind")
        ->check(CLI::IsMember({"D", "Gamma", "Delta", "B"}));
    fromfile->add_option("--format", file_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "csv", "text"}));
    fromfile->add_option("--out", file_opt.out, "Output path (default stdout)");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Run a claim verifier");
    verify
        ->add_option("claim", verify_opt.claim,
                     "One of: lemma2, lemma8, lemma11, theorem9, theorem13, "
                     "corollary2, corollary14, lemmas14-15, figures, "
                     "diameter-bounds, conjecture, power-adjacency, oracle")
        ->required();
    verify->add_option("--from", verify_opt.from, "Range start (claim default if omitted)");
    verify->add_option("--to", verify_opt.to, "Range end (claim default if omitted)");
    verify->add_option("--max-n", verify_opt.max_n, "Cap for oracle/lemma2 sweeps");
    verify->add_option("--format", verify_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", verify_opt.out, "Output path (default stdout)");
    verify->add_option("--max-diameter-n", verify_opt.max_diameter_n,
                       "Diameter budget override");

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "CSV sweep over a range of n");
    sweep->add_option("--group", sweep_opt.group, "Group family: S or A")
        ->check(CLI::IsMember({"S", "A"}));
    sweep->add_option("--from", sweep_opt.from, "Range start");
    sweep->add_option("--to", sweep_opt.to, "Range end");
    sweep->add_option("--out", sweep_opt.out, "Output path (default stdout)");
    sweep->add_option("--max-build-n", sweep_opt.max_build_n, "Build budget override");
    sweep->add_option("--max-diameter-n", sweep_opt.max_diameter_n,
                      "Diameter budget override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (build->parsed())
            return run_build(build_opt);
        if (fromfile->parsed())
            return run_fromfile(file_opt);
        if (verify->parsed())
            return run_verify(verify_opt);
        if (sweep->parsed())
            return run_sweep(sweep_opt);
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
