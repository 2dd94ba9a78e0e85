#pragma once

#include <cstdint>

#include "mcds/dense.hpp"
#include "mcds/graph.hpp"

namespace mcds {

// One unit of sparse-case work: a graph with decided vertices I (in) and O
// (out), and free vertices L.
struct ExtensionInstance {
    Graph graph;
    VertexSet L;
    VertexSet I;
    VertexSet O;
};

// Result of the cleaning rules: no edge remains inside I+O, L untouched.
struct ReducedInstance {
    ExtensionInstance instance;
    ContractionMap map;  // from the pre-reduction graph; injective on L
    VertexSet Hprime;
    VertexSet Rprime;
};

enum class Subcase { SmallBoundary, ScatteredR };

struct SparseStats {
    std::uint64_t branches = 0;
    std::uint64_t candidates_tested = 0;
    std::uint64_t emitted = 0;
    std::uint64_t small_fallbacks = 0;    // I empty: full subset scan
    std::uint64_t hitting_fallbacks = 0;  // |I+O| <= 1: full subset scan
};

// Greedy (ascending id) maximal independent subset of L.
VertexSet maximal_independent_in(const Graph& g, const VertexSet& l);

// Applies the three cleaning rules until G[I+O] is edgeless: delete an
// O-vertex adjacent to I, delete an O-O edge, contract an I-I edge (the
// merged vertex lands in H' if either endpoint was there). Preserves the set
// of minimal extensions over subsets of L.
ReducedInstance reduce_instance(const ExtensionInstance& inst, const VertexSet& h,
                                const VertexSet& r);

// SmallBoundary iff at most |L|/10 vertices of R' have degree < 10*ell.
Subcase classify_subcase(const ReducedInstance& red, int ell);

// Scans subsets of L of size <= |I+O| (the minimal-extension size bound for
// nonempty I). With I empty the bound does not apply and all subsets of L
// are scanned instead.
void enumerate_extensions_small(const ReducedInstance& red, const SetSink& sink,
                                SparseStats* stats = nullptr);

// Greedy subset of the low-degree part of R' with pairwise disjoint
// neighborhoods.
VertexSet select_scattered_R(const ReducedInstance& red, int ell);

// Walks the superset-closed family of subsets of L hitting every
// neighborhood N(r), r in rprime, and keeps the minimal extensions. Requires
// |I+O| >= 2 for the hitting argument; below that all subsets of L are
// scanned.
void enumerate_extensions_hitting(const ReducedInstance& red, const VertexSet& rprime,
                                  const SetSink& sink, SparseStats* stats = nullptr);

// Full sparse case: shrink L to a maximal independent set, demote the rest
// to R, then branch over all (I,O) partitions of H+R and run the matching
// subcase enumerator. Emits each minimal CDS of g exactly once. Returns
// false (emitting nothing) when the entry precondition |L| >= 10*|H|*ell /
// neighbor bound fails, so the driver can fall back.
bool enumerate_sparse(const Graph& g, const VertexSet& l, const VertexSet& h,
                      const VertexSet& r, int ell, const SetSink& sink,
                      SparseStats* stats = nullptr, int workers = 1);

}  // namespace mcds
