#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mcds/driver.hpp"
#include "mcds/oracle.hpp"
#include "mcds/parallel.hpp"
#include "mcds/rng.hpp"

namespace {

using namespace mcds;

struct CommonOpts {
    std::string file;
    std::string format = "edgelist";
    std::string algo = "auto";
    int ell = 14;
    long long h = 300000;
    std::string delta = "1/60";
    bool count_only = false;
    int workers = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_file = true) {
    cmd->set_help_flag("--help", "print usage");  // frees -h for the probe parameter
    if (with_file) cmd->add_option("file", o.file, "input graph file")->required();
    cmd->add_option("--format", o.format, "input format")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    cmd->add_option("--algo", o.algo, "algorithm selection")
        ->check(CLI::IsMember({"auto", "oracle", "structured"}));
    cmd->add_option("--ell", o.ell, "probe parameter ell");
    cmd->add_option("--h", o.h, "probe parameter h");
    cmd->add_option("--delta", o.delta, "probe parameter delta as P/Q");
    cmd->add_flag("--count-only", o.count_only, "suppress set lines, print only the report");
    cmd->add_option("--workers", o.workers, "worker thread count")->check(CLI::PositiveNumber);
}

RunConfig make_config(const CommonOpts& o) {
    RunConfig cfg;
    cfg.probe.ell = o.ell;
    cfg.probe.h = static_cast<int>(o.h);
    cfg.probe.delta = parse_frac(o.delta);
    cfg.count_only = o.count_only;
    cfg.workers = o.workers;
    cfg.format = o.format == "dimacs" ? InputFormat::Dimacs : InputFormat::EdgeList;
    if (o.algo == "oracle")
        cfg.algo = Algo::Oracle;
    else if (o.algo == "structured")
        cfg.algo = Algo::Structured;
    else
        cfg.algo = Algo::Auto;
    return cfg;
}

Graph load_graph(const std::string& path, InputFormat fmt) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return fmt == InputFormat::Dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

void print_sets(const std::vector<VertexSet>& sets) {
    for (const auto& s : sets) {
        bool first = true;
        for (int v = s.first(); v >= 0; v = s.next(v)) {
            if (!first) std::cout << ' ';
            std::cout << v;
            first = false;
        }
        std::cout << '\n';
    }
}

void print_report(const EnumerationReport& r) {
    std::cerr << "case_taken=" << to_string(r.case_taken) << '\n'
              << "mcds_count=" << r.mcds_count << '\n'
              << "candidates_tested=" << r.candidates_tested << '\n'
              << "branches=" << r.branches << '\n'
              << "wall_ms=" << r.wall_ms << '\n';
    if (!r.probe_summary.empty()) std::cerr << "probe_summary=" << r.probe_summary << '\n';
    if (r.small_fallbacks) std::cerr << "small_fallbacks=" << r.small_fallbacks << '\n';
    if (r.hitting_fallbacks) std::cerr << "hitting_fallbacks=" << r.hitting_fallbacks << '\n';
}

int run_enumerate(const CommonOpts& o) {
    RunConfig cfg = make_config(o);
    Graph g = load_graph(o.file, cfg.format);
    auto [sets, report] = enumerate_mcds(g, cfg);
    if (!cfg.count_only) print_sets(sets);
    print_report(report);
    return 0;
}

int run_verify(const CommonOpts& o) {
    RunConfig cfg = make_config(o);
    Graph g = load_graph(o.file, cfg.format);
    RunConfig structured = cfg, oracle = cfg;
    structured.algo = Algo::Structured;
    oracle.algo = Algo::Oracle;
    auto [s_sets, s_rep] = enumerate_mcds(g, structured);
    auto [o_sets, o_rep] = enumerate_mcds(g, oracle);
    print_report(s_rep);
    if (s_sets == o_sets) {
        std::cerr << "verify=ok count=" << o_sets.size() << '\n';
        return 0;
    }
    std::cerr << "verify=MISMATCH structured=" << s_sets.size() << " oracle=" << o_sets.size()
              << '\n';
    return 1;
}

struct BenchOpts {
    int n = 12;
    double p = 0.3;
    int trials = 100;
    std::uint64_t seed = 1;
    std::string csv;
    std::string algo = "auto";
    bool connected = false;
    int workers = 1;
};

int run_bench(const BenchOpts& b) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!b.csv.empty()) {
        file.open(b.csv);
        if (!file) throw ParseError("cannot open csv output: " + b.csv);
        out = &file;
    }
    RunConfig cfg;
    cfg.workers = b.workers;
    if (b.algo == "oracle") cfg.algo = Algo::Oracle;
    if (b.algo == "structured") cfg.algo = Algo::Structured;

    (*out) << "n,p,seed,trial,mcds_count,case_taken,wall_ms\n";
    for (int t = 0; t < b.trials; ++t) {
        std::uint64_t stream = b.seed;
        for (int i = 0; i <= t; ++i) splitmix64(stream);
        Xoshiro256 rng(stream);
        Graph g = b.connected ? random_connected_gnp(b.n, b.p, rng)
                              : random_gnp(b.n, b.p, rng);
        auto [sets, report] = enumerate_mcds(g, cfg);
        (*out) << b.n << ',' << b.p << ',' << b.seed << ',' << t << ',' << report.mcds_count
               << ',' << to_string(report.case_taken) << ',' << report.wall_ms << '\n';
    }
    return 0;
}

int run_extremal(int n, int workers) {
    if (n < 1 || n > 7) throw ParseError("extremal: n must be between 1 and 7");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::uint64_t total = 1ULL << pairs.size();

    std::uint64_t best_count = 0, best_mask = 0;
    std::uint64_t chunk = std::max<std::uint64_t>(1024, total / 256);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> per_chunk(chunk_count(total, chunk),
                                                                  {0, 0});
    parallel_chunks(total, chunk, workers,
                    [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t mask = lo; mask < hi; ++mask) {
                            GraphBuilder b(n);
                            for (std::size_t i = 0; i < pairs.size(); ++i)
                                if ((mask >> i) & 1) b.add_edge(pairs[i].first, pairs[i].second);
                            Graph g = std::move(b).build();
                            std::uint64_t count = oracle_enumerate(g).size();
                            if (count > per_chunk[c].first) per_chunk[c] = {count, mask};
                        }
                    });
    for (const auto& [count, mask] : per_chunk)
        if (count > best_count) {
            best_count = count;
            best_mask = mask;
        }

    std::cout << "n=" << n << " max_mcds_count=" << best_count << "\nwitness:\n";
    int m = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((best_mask >> i) & 1) ++m;
    std::cout << n << ' ' << m << '\n';
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((best_mask >> i) & 1)
            std::cout << pairs[i].first << ' ' << pairs[i].second << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal connected dominating set enumeration"};
    // --h is a probe parameter, so help keeps only its long form
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    CommonOpts enum_opts, verify_opts;
    BenchOpts bench_opts;
    int extremal_n = 5;
    int extremal_workers = 1;

    auto* cmd_enum = app.add_subcommand("enumerate", "list all minimal CDS of a graph");
    add_common(cmd_enum, enum_opts);
    auto* cmd_verify = app.add_subcommand("verify", "cross-check structured output vs oracle");
    add_common(cmd_verify, verify_opts);
    auto* cmd_bench = app.add_subcommand("bench", "G(n,p) benchmark, CSV output");
    cmd_bench->add_option("--n", bench_opts.n)->required();
    cmd_bench->add_option("--p", bench_opts.p)->required();
    cmd_bench->add_option("--trials", bench_opts.trials)->required();
    cmd_bench->add_option("--seed", bench_opts.seed)->required();
    cmd_bench->add_option("--csv", bench_opts.csv, "write rows to this file");
    cmd_bench->add_option("--algo", bench_opts.algo)
        ->check(CLI::IsMember({"auto", "oracle", "structured"}));
    cmd_bench->add_flag("--connected", bench_opts.connected, "rejection-sample connected graphs");
    cmd_bench->add_option("--workers", bench_opts.workers)->check(CLI::PositiveNumber);
    auto* cmd_extremal =
        app.add_subcommand("extremal", "max MCDS count over all labeled graphs on n vertices");
    cmd_extremal->add_option("--n", extremal_n)->required();
    cmd_extremal->add_option("--workers", extremal_workers)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_enum->parsed()) return run_enumerate(enum_opts);
        if (cmd_verify->parsed()) return run_verify(verify_opts);
        if (cmd_bench->parsed()) return run_bench(bench_opts);
        if (cmd_extremal->parsed()) return run_extremal(extremal_n, extremal_workers);
    } catch (const mcds::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const mcds::CapacityError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
