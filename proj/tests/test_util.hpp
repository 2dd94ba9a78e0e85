#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mcds/graph.hpp"
#include "mcds/rng.hpp"
#include "mcds/vertex_set.hpp"

namespace mcds::testutil {

inline Graph path(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

inline Graph cycle(int n) {
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

inline Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph star(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return std::move(b).build();
}

inline Graph petersen() {
    GraphBuilder b(10);
    for (int v = 0; v < 5; ++v) {
        b.add_edge(v, (v + 1) % 5);      // outer cycle
        b.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        b.add_edge(v, 5 + v);            // spokes
    }
    return std::move(b).build();
}

// Graph from an edge mask over the C(n,2) pairs in (u,v) order; used to walk
// every labeled graph on small n.
inline Graph from_edge_mask(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    std::size_t i = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++i)
            if ((mask >> i) & 1) b.add_edge(u, v);
    return std::move(b).build();
}

inline std::uint64_t pair_count(int n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

inline VertexSet set_from_mask(int n, std::uint64_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) s.insert(v);
    return s;
}

// --- textually independent reference predicates (adjacency-matrix based) ---

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
    int n = g.num_vertices();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
    return m;
}

inline bool naive_connected_on(const std::vector<std::vector<bool>>& m,
                               const std::vector<int>& s) {
    if (s.empty()) return false;
    std::vector<int> seen{s[0]};
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v : s) {
            if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
            for (int u : seen)
                if (m[u][v]) {
                    seen.push_back(v);
                    grew = true;
                    break;
                }
        }
    }
    return seen.size() == s.size();
}

inline bool naive_dominates(const std::vector<std::vector<bool>>& m, const std::vector<int>& s) {
    int n = static_cast<int>(m.size());
    for (int v = 0; v < n; ++v) {
        if (std::find(s.begin(), s.end(), v) != s.end()) continue;
        bool hit = false;
        for (int u : s)
            if (m[u][v]) hit = true;
        if (!hit) return false;
    }
    return true;
}

inline bool naive_cds(const Graph& g, const VertexSet& s) {
    auto m = adjacency_matrix(g);
    auto ids = s.members();
    return naive_dominates(m, ids) && naive_connected_on(m, ids);
}

// Quadratic cut-vertex oracle: remove each vertex and recount components.
inline VertexSet naive_cut_vertices(const Graph& g) {
    int n = g.num_vertices();
    int base = component_count(g);
    VertexSet cuts(n);
    for (int v = 0; v < n; ++v) {
        auto [smaller, map] = delete_vertex(g, v);
        // an isolated vertex contributes a component of its own
        int removed_isolated = g.degree(v) == 0 ? 1 : 0;
        if (component_count(smaller) > base - removed_isolated) cuts.insert(v);
    }
    return cuts;
}

inline std::vector<VertexSet> sorted_canonical(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
    return sets;
}

}  // namespace mcds::testutil
