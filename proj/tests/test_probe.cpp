#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcds/probe.hpp"
#include "mcds/rng.hpp"
#include "test_util.hpp"

using namespace mcds;
using namespace mcds::testutil;

TEST_CASE("edgeless graph lands in the partition branch") {
    GraphBuilder b(5);
    Graph g = std::move(b).build();
    auto r = greedy_probe(g, {.ell = 1, .h = 2, .delta = {1, 2}});
    REQUIRE(std::holds_alternative<LhrPartition>(r));
    const auto& part = std::get<LhrPartition>(r);
    CHECK(part.L == VertexSet::full(5));
    CHECK(part.H.empty());
    CHECK(part.R.empty());
}

TEST_CASE("K4 yields a spanning subgraph for small ell") {
    auto r = greedy_probe(complete(4), {.ell = 1, .h = 3, .delta = {1, 2}});
    REQUIRE(std::holds_alternative<SpanningSubgraph>(r));
    const Graph& gp = std::get<SpanningSubgraph>(r).gprime;
    for (int v = 0; v < 4; ++v) CHECK(gp.degree(v) >= 1);
}

TEST_CASE("star saturates the center into H") {
    auto r = greedy_probe(star(6), {.ell = 2, .h = 2, .delta = {1, 2}});
    REQUIRE(std::holds_alternative<LhrPartition>(r));
    const auto& part = std::get<LhrPartition>(r);
    CHECK(part.H == VertexSet::singleton(7, 0));
    CHECK(part.L.count() >= 4);
    CHECK(2 * part.L.count() >= 7);
}

TEST_CASE("empty graph returns the empty spanning subgraph") {
    auto r = greedy_probe(Graph(0), {});
    CHECK(std::holds_alternative<SpanningSubgraph>(r));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(greedy_probe(path(3), {.ell = 5, .h = 2}), std::invalid_argument);
    CHECK_THROWS_AS(greedy_probe(path(3), {.ell = 1, .h = 2, .delta = {3, 2}}),
                    std::invalid_argument);
}

TEST_CASE("determinism") {
    Xoshiro256 rng(5);
    Graph g = random_gnp(30, 0.3, rng);
    auto a = greedy_probe(g, {.ell = 3, .h = 5, .delta = {1, 4}});
    auto b = greedy_probe(g, {.ell = 3, .h = 5, .delta = {1, 4}});
    REQUIRE(a.index() == b.index());
    if (std::holds_alternative<LhrPartition>(a)) {
        CHECK(std::get<LhrPartition>(a).L == std::get<LhrPartition>(b).L);
        CHECK(std::get<LhrPartition>(a).H == std::get<LhrPartition>(b).H);
    } else {
        CHECK(std::get<SpanningSubgraph>(a).gprime.edges() ==
              std::get<SpanningSubgraph>(b).gprime.edges());
    }
}

TEST_CASE("random probes: invariants, potential decrease, edge bound") {
    Xoshiro256 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(24));
        Graph g = random_gnp(n, rng.next_double(), rng);
        int h = 1 + static_cast<int>(rng.next_below(12));
        int ell = 1 + static_cast<int>(rng.next_below(h));
        std::int64_t den = 1 + static_cast<int>(rng.next_below(10));
        std::int64_t num = rng.next_below(den + 1);
        ProbeParams params{.ell = ell, .h = h, .delta = Frac(num, den)};

        ProbeStats stats;
        // greedy_probe itself asserts the branch invariants before returning
        auto r = greedy_probe(g, params, &stats);
        for (std::size_t i = 1; i < stats.phi_trace.size(); ++i)
            CHECK(stats.phi_trace[i] < stats.phi_trace[i - 1]);
        CHECK(stats.edges_added <= n * ell);
        if (std::holds_alternative<SpanningSubgraph>(r))
            CHECK(std::get<SpanningSubgraph>(r).gprime.num_edges() <= n * ell);
    }
}
