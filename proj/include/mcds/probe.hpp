#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mcds/frac.hpp"
#include "mcds/graph.hpp"

namespace mcds {

struct ProbeParams {
    int ell = 14;
    int h = 300000;
    Frac delta{1, 60};
};

struct SpanningSubgraph {
    Graph gprime;
};

struct LhrPartition {
    VertexSet L;  // degree < ell in G'
    VertexSet H;  // degree == h in G'
    VertexSet R;  // the rest
};

using ProbeResult = std::variant<SpanningSubgraph, LhrPartition>;

struct ProbeStats {
    int edges_added = 0;
    // Potential sum_v max(ell - deg(v), 0) after each edge addition,
    // starting with the initial value n*ell.
    std::vector<std::int64_t> phi_trace;
};

// Greedy spanning-subgraph construction: repeatedly add an edge of G whose
// endpoints both have G'-degree < h and at least one has G'-degree < ell.
// Returns the subgraph when fewer than delta*n vertices stay below ell,
// otherwise the (L,H,R) partition. Deterministic: one ascending pass over
// vertices, each picking its smallest eligible neighbor.
ProbeResult greedy_probe(const Graph& g, const ProbeParams& params, ProbeStats* stats = nullptr);

}  // namespace mcds
