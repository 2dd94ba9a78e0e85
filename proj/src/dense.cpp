#include "mcds/dense.hpp"

#include <atomic>
#include <stdexcept>

#include "mcds/combinations.hpp"
#include "mcds/family_enum.hpp"
#include "mcds/parallel.hpp"

namespace mcds {

void enumerate_dense(const Graph& g, const Graph& gprime, const DenseParams& params,
                     const SetSink& sink, DenseStats* stats, int workers) {
    int n = g.num_vertices();
    if (gprime.num_vertices() != n)
        throw std::invalid_argument("enumerate_dense: V(G') != V(G)");
    for (int v = 0; v < n; ++v)
        if (!gprime.neighbors(v).is_subset_of(g.neighbors(v)))
            throw std::invalid_argument("enumerate_dense: E(G') not a subset of E(G)");
    if (params.size_cut.num <= 0 || params.size_cut.num >= params.size_cut.den)
        throw std::invalid_argument("enumerate_dense: need 0 < size_cut < 1");

    std::int64_t cutoff = floor_mul(params.size_cut, n);
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    std::atomic<std::uint64_t> tested{0};
    std::uint64_t emitted = 0;

    // Phase 1: all sets of size <= cutoff, colex per size, rank-split across
    // workers.
    for (int k = 0; k <= cutoff && k <= n; ++k) {
        ColexCombinations combos(n, k);
        std::uint64_t total = combos.total();
        std::uint64_t chunk = std::max<std::uint64_t>(1 << 10, total / 256);
        std::vector<std::vector<VertexSet>> found(chunk_count(total, chunk));
        parallel_chunks(total, chunk, workers,
                        [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
                            std::vector<int> pos = combos.unrank(lo);
                            for (std::uint64_t r = lo; r < hi; ++r) {
                                VertexSet s = positions_to_set(n, ids, pos);
                                tested.fetch_add(1, std::memory_order_relaxed);
                                if (is_minimal_cds(g, s)) found[c].push_back(std::move(s));
                                if (r + 1 < hi) combos.advance(pos);
                            }
                        });
        for (auto& part : found)
            for (auto& s : part) {
                ++emitted;
                sink(s);
            }
    }

    // Phase 2: subset-closed low-S-degree family over G', filtered to the
    // sizes phase 1 did not cover.
    FamilyEnumerator fam(
        VertexSet::full(n),
        [&](const VertexSet& s) {
            return params.ls_threshold.met(low_degree_set(gprime, s).count(), n);
        },
        Closure::Downward);
    while (auto s = fam.next()) {
        if (s->count() <= cutoff) continue;
        tested.fetch_add(1, std::memory_order_relaxed);
        if (is_minimal_cds(g, *s)) {
            ++emitted;
            sink(*s);
        }
    }

    if (stats) {
        stats->candidates_tested += tested.load();
        stats->emitted += emitted;
    }
}

}  // namespace mcds
