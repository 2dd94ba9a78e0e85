#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mcds/dense.hpp"
#include "mcds/probe.hpp"
#include "mcds/sparse.hpp"

namespace mcds {

enum class Algo { Auto, Oracle, Structured };
enum class InputFormat { EdgeList, Dimacs };
enum class CaseTaken { Dense, Sparse, Oracle, SparseFallback };

struct RunConfig {
    ProbeParams probe;
    DenseParams dense;
    Algo algo = Algo::Auto;
    bool count_only = false;
    InputFormat format = InputFormat::EdgeList;
    int workers = 1;
    int auto_oracle_threshold = 22;  // n up to which AUTO prefers the oracle
};

struct EnumerationReport {
    CaseTaken case_taken = CaseTaken::Oracle;
    std::uint64_t mcds_count = 0;
    std::uint64_t candidates_tested = 0;
    std::uint64_t branches = 0;
    double wall_ms = 0.0;
    std::string probe_summary;  // L/H/R sizes or G' degree summary
    std::uint64_t small_fallbacks = 0;
    std::uint64_t hitting_fallbacks = 0;
};

const char* to_string(CaseTaken c);

// Top-level dispatch: probe, then dense or sparse, with oracle fallback
// when the sparse precondition fails. Output sorted by (size, lex); the
// set of sets is identical for every algo choice.
std::pair<std::vector<VertexSet>, EnumerationReport> enumerate_mcds(const Graph& g,
                                                                    const RunConfig& cfg);

}  // namespace mcds
