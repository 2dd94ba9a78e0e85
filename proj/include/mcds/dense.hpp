#pragma once

#include <cstdint>
#include <functional>

#include "mcds/frac.hpp"
#include "mcds/kernel.hpp"

namespace mcds {

struct DenseParams {
    Frac size_cut{4, 10};            // |S| threshold between the two phases
    LowDegreeThreshold ls_threshold;  // |L(S)| >= n/20 by default
};

struct DenseStats {
    std::uint64_t candidates_tested = 0;
    std::uint64_t emitted = 0;
};

using SetSink = std::function<void(const VertexSet&)>;

// Emits every minimal CDS of g exactly once. Phase 1 scans all sets of size
// at most floor(size_cut*n) by a colex combinations iterator; phase 2 walks
// the subset-closed family { S : |L_{G'}(S)| >= n/20 } and keeps minimal CDS
// strictly larger than the phase-1 cutoff. L(S) is evaluated in gprime,
// where the counting bound lives; L_G(S) is a subset of L_{G'}(S) for any
// spanning subgraph, so no large minimal CDS is missed.
void enumerate_dense(const Graph& g, const Graph& gprime, const DenseParams& params,
                     const SetSink& sink, DenseStats* stats = nullptr, int workers = 1);

}  // namespace mcds
