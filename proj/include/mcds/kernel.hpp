#pragma once

#include "mcds/frac.hpp"
#include "mcds/graph.hpp"

namespace mcds {

// Fraction of n that |L(S)| is compared against (exact rational).
struct LowDegreeThreshold {
    Frac fraction{1, 20};

    bool met(int low_degree_count, int n) const {
        return at_least_fraction(low_degree_count, fraction, n);
    }
};

bool is_cds(const Graph& g, const VertexSet& s);
bool is_minimal_cds(const Graph& g, const VertexSet& s);

// Minimal (I,O)-extension check: I + S is a CDS and no single-vertex removal
// from S keeps it one. Single removals suffice for minimality.
bool is_minimal_extension(const Graph& g, const VertexSet& in, const VertexSet& out,
                          const VertexSet& s);

// L(S): all vertices (members of S included) with at most 2 neighbors in S.
VertexSet low_degree_set(const Graph& g, const VertexSet& s);

// Cut vertices of G[S], in original ids. Requires G[S] connected.
VertexSet cut_set_of_induced(const Graph& g, const VertexSet& s);

}  // namespace mcds
