#include "mcds/sparse.hpp"

#include <atomic>
#include <stdexcept>

#include "mcds/combinations.hpp"
#include "mcds/family_enum.hpp"
#include "mcds/kernel.hpp"
#include "mcds/oracle.hpp"
#include "mcds/parallel.hpp"

namespace mcds {

VertexSet maximal_independent_in(const Graph& g, const VertexSet& l) {
    VertexSet chosen(g.num_vertices());
    VertexSet blocked(g.num_vertices());
    for (int v = l.first(); v >= 0; v = l.next(v)) {
        if (blocked.contains(v)) continue;
        chosen.insert(v);
        blocked |= g.neighbors(v);
    }
    return chosen;
}

namespace {

// First edge with both endpoints in `inside`, or (-1,-1). Scanning u
// ascending guarantees u < v.
std::pair<int, int> find_inside_edge(const Graph& g, const VertexSet& inside) {
    for (int u = inside.first(); u >= 0; u = inside.next(u)) {
        VertexSet nb = g.neighbors(u) & inside;
        int v = nb.first();
        if (v >= 0) return {u, v};
    }
    return {-1, -1};
}

void scan_subsets_of_l(const ReducedInstance& red, int max_size, const SetSink& sink,
                       std::uint64_t& tested) {
    const auto& inst = red.instance;
    std::vector<int> ids = inst.L.members();
    int n = inst.graph.num_vertices();
    for (int k = 0; k <= max_size && k <= static_cast<int>(ids.size()); ++k) {
        ColexCombinations combos(static_cast<int>(ids.size()), k);
        std::vector<int> pos = combos.unrank(0);
        bool more = combos.total() > 0;
        while (more) {
            VertexSet s = positions_to_set(n, ids, pos);
            ++tested;
            if (is_minimal_extension(inst.graph, inst.I, inst.O, s)) sink(s);
            more = combos.advance(pos);
        }
    }
}

}  // namespace

ReducedInstance reduce_instance(const ExtensionInstance& inst, const VertexSet& h,
                                const VertexSet& r) {
    int n = inst.graph.num_vertices();
    const VertexSet decided = inst.I | inst.O;
    if (inst.I.intersects(inst.O) || inst.L.intersects(decided) ||
        (inst.L | decided).count() != n)
        throw std::invalid_argument("reduce_instance: L, I, O must partition V");
    if (!(decided == (h | r)) || h.intersects(r))
        throw std::invalid_argument("reduce_instance: I+O must equal H+R");
    for (int v = inst.L.first(); v >= 0; v = inst.L.next(v))
        if (inst.graph.neighbors(v).intersects(inst.L))
            throw std::invalid_argument("reduce_instance: L must be independent");

    Graph g = inst.graph;
    VertexSet l = inst.L, in = inst.I, out = inst.O, hc = h, rc = r;
    ContractionMap total = ContractionMap::identity(n);

    for (;;) {
        auto [u, v] = find_inside_edge(g, in | out);
        if (u < 0) break;
        if (in.contains(u) && in.contains(v)) {
            auto [g2, m] = contract_edge(g, u, v);
            g = std::move(g2);
            l = m.apply(l);
            in = m.apply(in);
            out = m.apply(out);
            hc = m.apply(hc);
            rc = m.apply(rc);
            rc -= hc;  // merged vertex goes to H' if either endpoint was there
            total = total.then(m);
        } else if (out.contains(u) && out.contains(v)) {
            g = delete_edge(g, u, v);
        } else {
            int gone = out.contains(u) ? u : v;  // O-vertex adjacent to I
            auto [g2, m] = delete_vertex(g, gone);
            g = std::move(g2);
            l = m.apply(l);
            in = m.apply(in);
            out = m.apply(out);
            hc = m.apply(hc);
            rc = m.apply(rc);
            total = total.then(m);
        }
    }

    // L is never deleted or contracted
    if (l.count() != inst.L.count())
        throw std::logic_error("reduce_instance: lost a free vertex");

    ReducedInstance red;
    red.instance = ExtensionInstance{std::move(g), std::move(l), std::move(in), std::move(out)};
    red.map = std::move(total);
    red.Hprime = std::move(hc);
    red.Rprime = std::move(rc);
    return red;
}

Subcase classify_subcase(const ReducedInstance& red, int ell) {
    int low = 0;
    const Graph& g = red.instance.graph;
    for (int v = red.Rprime.first(); v >= 0; v = red.Rprime.next(v))
        if (g.degree(v) < 10 * ell) ++low;
    return 10 * low <= red.instance.L.count() ? Subcase::SmallBoundary : Subcase::ScatteredR;
}

void enumerate_extensions_small(const ReducedInstance& red, const SetSink& sink,
                                SparseStats* stats) {
    const auto& inst = red.instance;
    std::uint64_t tested = 0;
    int max_size;
    if (inst.I.empty()) {
        // the |S| <= |I+O| bound needs nonempty I; scan everything
        max_size = inst.L.count();
        if (stats) ++stats->small_fallbacks;
    } else {
        max_size = std::min((inst.I | inst.O).count(), inst.L.count());
    }
    scan_subsets_of_l(red, max_size, sink, tested);
    if (stats) stats->candidates_tested += tested;
}

VertexSet select_scattered_R(const ReducedInstance& red, int ell) {
    const Graph& g = red.instance.graph;
    VertexSet r_small(g.num_vertices());
    for (int v = red.Rprime.first(); v >= 0; v = red.Rprime.next(v))
        if (g.degree(v) < 10 * ell) r_small.insert(v);

    VertexSet picked(g.num_vertices());
    VertexSet marked(g.num_vertices());
    for (int v = r_small.first(); v >= 0; v = r_small.next(v)) {
        if (marked.contains(v)) continue;
        picked.insert(v);
        marked.insert(v);
        for (int w = r_small.next(v); w >= 0; w = r_small.next(w))
            if (g.neighbors(v).intersects(g.neighbors(w))) marked.insert(w);
    }
    return picked;
}

void enumerate_extensions_hitting(const ReducedInstance& red, const VertexSet& rprime,
                                  const SetSink& sink, SparseStats* stats) {
    const auto& inst = red.instance;
    std::uint64_t tested = 0;
    if ((inst.I | inst.O).count() <= 1) {
        // hitting soundness needs |I+O| >= 2
        if (stats) ++stats->hitting_fallbacks;
        scan_subsets_of_l(red, inst.L.count(), sink, tested);
        if (stats) stats->candidates_tested += tested;
        return;
    }
    std::vector<VertexSet> targets;
    for (int r = rprime.first(); r >= 0; r = rprime.next(r))
        targets.push_back(inst.graph.neighbors(r));
    FamilyEnumerator fam(
        inst.L,
        [&](const VertexSet& s) {
            for (const auto& nb : targets)
                if (!nb.intersects(s)) return false;
            return true;
        },
        Closure::Upward);
    while (auto s = fam.next()) {
        ++tested;
        if (is_minimal_extension(inst.graph, inst.I, inst.O, *s)) sink(*s);
    }
    if (stats) stats->candidates_tested += tested;
}

bool enumerate_sparse(const Graph& g, const VertexSet& l, const VertexSet& h,
                      const VertexSet& r, int ell, const SetSink& sink, SparseStats* stats,
                      int workers) {
    int n = g.num_vertices();
    if ((l | h | r).count() != n || l.count() + h.count() + r.count() != n)
        throw std::invalid_argument("enumerate_sparse: L, H, R must partition V");

    // Entry precondition; on failure the caller reverts to the oracle.
    if (static_cast<std::int64_t>(l.count()) <
        static_cast<std::int64_t>(10) * h.count() * ell)
        return false;
    VertexSet l_or_r = l | r;
    for (int v = l.first(); v >= 0; v = l.next(v))
        if (g.neighbors(v).intersection_count(l_or_r) >= ell) return false;

    VertexSet lp = maximal_independent_in(g, l);
    VertexSet r_enl = r | (l - lp);
    std::vector<int> branch_ids = (h | r_enl).members();
    if (branch_ids.size() > 30)
        throw CapacityError("enumerate_sparse: more than 2^30 (I,O) branches");

    std::uint64_t total = 1ULL << branch_ids.size();
    std::uint64_t chunk = std::max<std::uint64_t>(64, total / 256);
    std::vector<std::vector<VertexSet>> found(chunk_count(total, chunk));
    std::atomic<std::uint64_t> tested{0}, small_fb{0}, hitting_fb{0};

    parallel_chunks(total, chunk, workers, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
        SparseStats local;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            VertexSet in(n), out(n);
            for (std::size_t i = 0; i < branch_ids.size(); ++i) {
                if ((mask >> i) & 1)
                    in.insert(branch_ids[i]);
                else
                    out.insert(branch_ids[i]);
            }
            ExtensionInstance inst{g, lp, in, out};
            ReducedInstance red = reduce_instance(inst, h, r_enl);

            std::vector<VertexSet> exts;
            auto collect = [&exts](const VertexSet& s) { exts.push_back(s); };
            if (classify_subcase(red, ell) == Subcase::SmallBoundary) {
                enumerate_extensions_small(red, collect, &local);
            } else {
                VertexSet rp = select_scattered_R(red, ell);
                enumerate_extensions_hitting(red, rp, collect, &local);
            }

            // Free vertices keep their identity through the reduction; invert
            // the map on L to read extensions back in original ids.
            std::vector<int> inv(red.instance.graph.num_vertices(), -1);
            for (int old = lp.first(); old >= 0; old = lp.next(old))
                inv[red.map.forward[old]] = old;
            for (const auto& ext : exts) {
                VertexSet s_orig(n);
                ext.for_each([&](int x) { s_orig.insert(inv[x]); });
                VertexSet full = in | s_orig;
                ++local.candidates_tested;
                if (is_minimal_cds(g, full)) found[c].push_back(std::move(full));
            }
        }
        tested.fetch_add(local.candidates_tested, std::memory_order_relaxed);
        small_fb.fetch_add(local.small_fallbacks, std::memory_order_relaxed);
        hitting_fb.fetch_add(local.hitting_fallbacks, std::memory_order_relaxed);
    });

    std::uint64_t emitted = 0;
    for (auto& part : found)
        for (auto& s : part) {
            ++emitted;
            sink(s);
        }
    if (stats) {
        stats->branches += total;
        stats->candidates_tested += tested.load();
        stats->small_fallbacks += small_fb.load();
        stats->hitting_fallbacks += hitting_fb.load();
        stats->emitted += emitted;
    }
    return true;
}

}  // namespace mcds
