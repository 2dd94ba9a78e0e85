#include "mcds/oracle.hpp"

#include <algorithm>

#include "mcds/kernel.hpp"
#include "mcds/parallel.hpp"

namespace mcds {

namespace {

constexpr int kMaxFreeVertices = 30;

VertexSet from_mask(int universe, const std::vector<int>& ids, std::uint64_t mask) {
    VertexSet s(universe);
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) s.insert(ids[i]);
    return s;
}

}  // namespace

std::vector<VertexSet> oracle_enumerate(const Graph& g, int workers) {
    int n = g.num_vertices();
    if (n > kMaxFreeVertices)
        throw CapacityError("oracle_enumerate: n > 30 exceeds brute-force capacity");
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;

    std::uint64_t total = 1ULL << n;
    std::uint64_t chunk = std::max<std::uint64_t>(1 << 12, total / 256);
    std::vector<std::vector<VertexSet>> found(chunk_count(total, chunk));
    parallel_chunks(total, chunk, workers, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            VertexSet s = from_mask(n, ids, mask);
            if (is_minimal_cds(g, s)) found[c].push_back(std::move(s));
        }
    });
    std::vector<VertexSet> out;
    for (auto& part : found)
        out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<VertexSet> oracle_extensions(const Graph& g, const VertexSet& in,
                                         const VertexSet& out_set, int workers) {
    if (in.intersects(out_set))
        throw std::invalid_argument("oracle_extensions: I and O must be disjoint");
    VertexSet free = g.vertices() - in - out_set;
    std::vector<int> ids = free.members();
    if (ids.size() > kMaxFreeVertices)
        throw CapacityError("oracle_extensions: more than 30 free vertices");

    std::uint64_t total = 1ULL << ids.size();
    std::uint64_t chunk = std::max<std::uint64_t>(1 << 12, total / 256);
    std::vector<std::vector<VertexSet>> found(chunk_count(total, chunk));
    parallel_chunks(total, chunk, workers, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            VertexSet s = from_mask(g.num_vertices(), ids, mask);
            if (is_minimal_extension(g, in, out_set, s)) found[c].push_back(std::move(s));
        }
    });
    std::vector<VertexSet> result;
    for (auto& part : found)
        result.insert(result.end(), part.begin(), part.end());
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

}  // namespace mcds
