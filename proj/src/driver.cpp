#include "mcds/driver.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "mcds/oracle.hpp"

namespace mcds {

const char* to_string(CaseTaken c) {
    switch (c) {
        case CaseTaken::Dense: return "DENSE";
        case CaseTaken::Sparse: return "SPARSE";
        case CaseTaken::Oracle: return "ORACLE";
        case CaseTaken::SparseFallback: return "SPARSE_FALLBACK";
    }
    return "?";
}

namespace {

std::string subgraph_summary(const Graph& gp, int ell) {
    int min_d = gp.num_vertices() ? gp.num_vertices() : 0, max_d = 0, below = 0;
    for (int v = 0; v < gp.num_vertices(); ++v) {
        int d = gp.degree(v);
        min_d = std::min(min_d, d);
        max_d = std::max(max_d, d);
        if (d < ell) ++below;
    }
    std::ostringstream os;
    os << "gprime_min_deg=" << (gp.num_vertices() ? min_d : 0) << " gprime_max_deg=" << max_d
       << " gprime_below_ell=" << below;
    return os.str();
}

}  // namespace

std::pair<std::vector<VertexSet>, EnumerationReport> enumerate_mcds(const Graph& g,
                                                                    const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    EnumerationReport report;
    std::vector<VertexSet> result;

    Algo algo = cfg.algo;
    if (algo == Algo::Auto)
        algo = g.num_vertices() <= cfg.auto_oracle_threshold ? Algo::Oracle : Algo::Structured;

    if (algo == Algo::Oracle) {
        result = oracle_enumerate(g, cfg.workers);
        report.case_taken = CaseTaken::Oracle;
        report.candidates_tested = 1ULL << g.num_vertices();
    } else {
        ProbeResult probe = greedy_probe(g, cfg.probe);
        auto sink = [&result](const VertexSet& s) { result.push_back(s); };
        if (std::holds_alternative<SpanningSubgraph>(probe)) {
            const Graph& gp = std::get<SpanningSubgraph>(probe).gprime;
            DenseStats ds;
            enumerate_dense(g, gp, cfg.dense, sink, &ds, cfg.workers);
            report.case_taken = CaseTaken::Dense;
            report.candidates_tested = ds.candidates_tested;
            report.probe_summary = subgraph_summary(gp, cfg.probe.ell);
        } else {
            const auto& part = std::get<LhrPartition>(probe);
            std::ostringstream os;
            os << "L=" << part.L.count() << " H=" << part.H.count() << " R=" << part.R.count();
            report.probe_summary = os.str();
            SparseStats ss;
            bool ok = enumerate_sparse(g, part.L, part.H, part.R, cfg.probe.ell, sink, &ss,
                                       cfg.workers);
            if (ok) {
                report.case_taken = CaseTaken::Sparse;
                report.candidates_tested = ss.candidates_tested;
                report.branches = ss.branches;
                report.small_fallbacks = ss.small_fallbacks;
                report.hitting_fallbacks = ss.hitting_fallbacks;
            } else {
                result = oracle_enumerate(g, cfg.workers);
                report.case_taken = CaseTaken::SparseFallback;
                report.candidates_tested = 1ULL << g.num_vertices();
            }
        }
        std::sort(result.begin(), result.end(), canonical_less);
    }

    report.mcds_count = result.size();
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return {std::move(result), std::move(report)};
}

}  // namespace mcds
