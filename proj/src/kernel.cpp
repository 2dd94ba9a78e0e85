#include "mcds/kernel.hpp"

#include <stdexcept>

namespace mcds {

bool is_cds(const Graph& g, const VertexSet& s) {
    return dominates(g, s) && is_connected_on(g, s);
}

bool is_minimal_cds(const Graph& g, const VertexSet& s) {
    if (!is_cds(g, s)) return false;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        VertexSet smaller = s;
        smaller.erase(v);
        if (is_cds(g, smaller)) return false;
    }
    return true;
}

bool is_minimal_extension(const Graph& g, const VertexSet& in, const VertexSet& out,
                          const VertexSet& s) {
    if (in.intersects(out) || in.intersects(s) || out.intersects(s))
        throw std::invalid_argument("is_minimal_extension: I, O, S must be pairwise disjoint");
    if (!is_cds(g, in | s)) return false;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        VertexSet smaller = s;
        smaller.erase(v);
        if (is_cds(g, in | smaller)) return false;
    }
    return true;
}

VertexSet low_degree_set(const Graph& g, const VertexSet& s) {
    int n = g.num_vertices();
    VertexSet low(n);
    for (int v = 0; v < n; ++v)
        if (s_degree(g, s, v) <= 2) low.insert(v);
    return low;
}

VertexSet cut_set_of_induced(const Graph& g, const VertexSet& s) {
    auto ids = s.members();
    GraphBuilder b(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (g.has_edge(ids[i], ids[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    VertexSet induced_cuts = cut_vertices(std::move(b).build());
    VertexSet out(g.num_vertices());
    induced_cuts.for_each([&](int i) { out.insert(ids[i]); });
    return out;
}

}  // namespace mcds
