#include "mcds/probe.hpp"

#include <stdexcept>

namespace mcds {

namespace {

void check_invariants(const Graph& g, const ProbeParams& p, const ProbeResult& r,
                      const std::vector<int>& deg) {
    int n = g.num_vertices();
    if (std::holds_alternative<SpanningSubgraph>(r)) {
        const Graph& gp = std::get<SpanningSubgraph>(r).gprime;
        if (gp.num_vertices() != n) throw std::logic_error("probe: V(G') != V(G)");
        int below = 0;
        for (int v = 0; v < n; ++v) {
            if (!gp.neighbors(v).is_subset_of(g.neighbors(v)))
                throw std::logic_error("probe: E(G') not a subset of E(G)");
            if (gp.degree(v) > p.h) throw std::logic_error("probe: degree above h");
            if (gp.degree(v) < p.ell) ++below;
        }
        if (n > 0 && !below_fraction(below, p.delta, n))
            throw std::logic_error("probe: too many low-degree vertices for subgraph branch");
    } else {
        const auto& part = std::get<LhrPartition>(r);
        if ((part.L | part.H | part.R).count() != n ||
            part.L.count() + part.H.count() + part.R.count() != n)
            throw std::logic_error("probe: L,H,R is not a partition");
        if (!at_least_fraction(part.L.count(), p.delta, n))
            throw std::logic_error("probe: |L| below delta*n");
        for (int v = part.L.first(); v >= 0; v = part.L.next(v)) {
            VertexSet outside_h = g.neighbors(v) - part.H;
            if (outside_h.count() >= p.ell)
                throw std::logic_error("probe: L-vertex with too many neighbors outside H");
        }
        // |H| <= (2*ell/h) * n, cross-multiplied
        if (static_cast<std::int64_t>(part.H.count()) * p.h >
            static_cast<std::int64_t>(2) * p.ell * n)
            throw std::logic_error("probe: |H| above 2*ell/h * n");
    }
    (void)deg;
}

}  // namespace

ProbeResult greedy_probe(const Graph& g, const ProbeParams& params, ProbeStats* stats) {
    if (params.ell < 1 || params.ell > params.h)
        throw std::invalid_argument("greedy_probe: need 1 <= ell <= h");
    if (params.delta.num < 0 || params.delta.num > params.delta.den)
        throw std::invalid_argument("greedy_probe: need 0 <= delta <= 1");
    int n = g.num_vertices();
    if (n == 0) return SpanningSubgraph{Graph(0)};

    GraphBuilder gp(n);
    std::vector<int> deg(n, 0);
    std::int64_t phi = static_cast<std::int64_t>(n) * params.ell;
    if (stats) {
        stats->edges_added = 0;
        stats->phi_trace.clear();
        stats->phi_trace.push_back(phi);
    }

    // A single ascending pass suffices: degrees only grow, so a vertex whose
    // candidates were exhausted stays exhausted.
    for (int u = 0; u < n; ++u) {
        while (deg[u] < params.ell) {
            int picked = -1;
            for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v)) {
                if (deg[v] < params.h && !gp.has_edge(u, v)) {
                    picked = v;
                    break;
                }
            }
            if (picked < 0) break;
            gp.add_edge(u, picked);
            // one endpoint (u) was below ell, so phi drops by at least 1
            phi -= 1 + (deg[picked] < params.ell ? 1 : 0);
            ++deg[u];
            ++deg[picked];
            if (stats) {
                ++stats->edges_added;
                stats->phi_trace.push_back(phi);
            }
        }
    }

    VertexSet low(n);
    for (int v = 0; v < n; ++v)
        if (deg[v] < params.ell) low.insert(v);

    ProbeResult result;
    if (below_fraction(low.count(), params.delta, n)) {
        result = SpanningSubgraph{std::move(gp).build()};
    } else {
        VertexSet high(n), rest(n);
        for (int v = 0; v < n; ++v) {
            if (deg[v] < params.ell) continue;
            if (deg[v] == params.h)
                high.insert(v);
            else
                rest.insert(v);
        }
        result = LhrPartition{std::move(low), std::move(high), std::move(rest)};
    }
    check_invariants(g, params, result, deg);
    return result;
}

}  // namespace mcds
