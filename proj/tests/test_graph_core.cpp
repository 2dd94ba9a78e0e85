#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mcds/graph.hpp"
#include "mcds/rng.hpp"
#include "test_util.hpp"

using namespace mcds;
using namespace mcds::testutil;

TEST_CASE("parse_edge_list basics") {
    std::istringstream k2("2 1\n0 1\n");
    Graph g = parse_edge_list(k2);
    CHECK(g.num_vertices() == 2);
    CHECK(g.has_edge(0, 1));

    std::istringstream p4("4 3\n0 1\n1 2\n2 3\n");
    Graph gp = parse_edge_list(p4);
    CHECK(gp.num_edges() == 3);
    CHECK(gp.has_edge(1, 2));
    CHECK_FALSE(gp.has_edge(0, 3));

    std::istringstream edgeless("3 0\n");
    Graph ge = parse_edge_list(edgeless);
    CHECK(ge.num_vertices() == 3);
    CHECK(ge.num_edges() == 0);
}

TEST_CASE("parse_edge_list errors name the line") {
    std::istringstream bad_id("2 1\n0 5\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(bad_id), "line 2: vertex id out of range", ParseError);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(parse_edge_list(loop), ParseError);
    std::istringstream garbage("2 1\n0 x\n");
    CHECK_THROWS_AS(parse_edge_list(garbage), ParseError);
}

TEST_CASE("duplicate edges are merged") {
    std::istringstream dup("3 3\n0 1\n1 0\n1 2\n");
    Graph g = parse_edge_list(dup);
    CHECK(g.num_edges() == 2);
}

TEST_CASE("parse_dimacs") {
    std::istringstream in("c a path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    Graph g = parse_dimacs(in);
    CHECK(g.num_vertices() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 3));
}

TEST_CASE("s_degree") {
    Graph c4 = cycle(4);
    CHECK(s_degree(c4, VertexSet::of(4, {0, 1}), 2) == 1);
    CHECK(s_degree(c4, VertexSet(4), 2) == 0);
    Graph k4 = complete(4);
    CHECK(s_degree(k4, VertexSet::of(4, {1, 2, 3}), 0) == 3);
}

TEST_CASE("is_connected_on") {
    Graph p4 = path(4);
    CHECK(is_connected_on(p4, VertexSet::of(4, {1, 2})));
    CHECK_FALSE(is_connected_on(p4, VertexSet::of(4, {0, 3})));
    CHECK(is_connected_on(p4, VertexSet::singleton(4, 2)));
    CHECK_FALSE(is_connected_on(p4, VertexSet(4)));  // empty set convention
}

TEST_CASE("dominates") {
    Graph p4 = path(4);
    CHECK(dominates(p4, VertexSet::of(4, {1, 2})));
    CHECK_FALSE(dominates(p4, VertexSet::singleton(4, 1)));
    CHECK(dominates(p4, VertexSet::full(4)));
}

TEST_CASE("cut_vertices on named graphs") {
    CHECK(cut_vertices(path(4)) == VertexSet::of(4, {1, 2}));
    CHECK(cut_vertices(complete(4)).empty());
    CHECK(cut_vertices(star(3)) == VertexSet::singleton(4, 0));
}

TEST_CASE("cut_vertices agrees with quadratic oracle, all graphs n <= 5 + random n <= 8") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < (1ULL << pair_count(n)); ++mask) {
            Graph g = from_edge_mask(n, mask);
            CHECK(cut_vertices(g) == naive_cut_vertices(g));
        }
    }
    Xoshiro256 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 6 + static_cast<int>(rng.next_below(3));
        Graph g = random_gnp(n, 0.1 + 0.8 * rng.next_double(), rng);
        CHECK(cut_vertices(g) == naive_cut_vertices(g));
    }
}

TEST_CASE("contract_edge") {
    Graph p3 = path(3);
    auto [k2, m] = contract_edge(p3, 0, 1);
    CHECK(k2.num_vertices() == 2);
    CHECK(k2.has_edge(0, 1));
    CHECK(m.forward[0] == 0);
    CHECK(m.forward[1] == 0);
    CHECK(m.forward[2] == 1);

    auto [t2, m2] = contract_edge(complete(3), 0, 1);
    CHECK(t2.num_vertices() == 2);
    CHECK(t2.num_edges() == 1);  // parallel edges merged

    auto [tri, m3] = contract_edge(cycle(4), 0, 1);
    CHECK(tri.num_vertices() == 3);
    CHECK(tri.num_edges() == 3);

    CHECK_THROWS_AS(contract_edge(path(4), 0, 3), std::invalid_argument);
}

TEST_CASE("contract_edge matches direct neighborhood recomputation, exhaustive n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < (1ULL << pair_count(n)); ++mask) {
            Graph g = from_edge_mask(n, mask);
            for (auto [u, v] : g.edges()) {
                auto [h, m] = contract_edge(g, u, v);
                VertexSet expected = (g.neighbors(u) | g.neighbors(v));
                expected.erase(u);
                expected.erase(v);
                int w = m.forward[u];
                CHECK(h.neighbors(w) == m.apply(expected));
                // untouched adjacency survives the renumbering
                for (int x = 0; x < n; ++x) {
                    if (x == u || x == v) continue;
                    VertexSet nx = g.neighbors(x);
                    bool touches = nx.contains(u) || nx.contains(v);
                    VertexSet mapped = m.apply(nx);
                    if (!touches) CHECK(h.neighbors(m.forward[x]) == mapped);
                }
            }
        }
    }
}

TEST_CASE("delete_vertex and delete_edge") {
    auto [iso2, m] = delete_vertex(path(3), 1);
    CHECK(iso2.num_vertices() == 2);
    CHECK(iso2.num_edges() == 0);

    Graph p3 = delete_edge(complete(3), 0, 1);
    CHECK(p3.num_edges() == 2);

    auto [empty, m2] = delete_vertex(complete(1), 0);
    CHECK(empty.num_vertices() == 0);

    CHECK_THROWS_AS(delete_edge(path(4), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(delete_vertex(path(4), 7), std::invalid_argument);
}

TEST_CASE("cds predicates agree with naive matrix implementations, exhaustive n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t gmask = 0; gmask < (1ULL << pair_count(n)); gmask += 3) {
            Graph g = from_edge_mask(n, gmask);
            auto matrix = adjacency_matrix(g);
            for (std::uint64_t smask = 0; smask < (1ULL << n); ++smask) {
                VertexSet s = set_from_mask(n, smask);
                auto ids = s.members();
                CHECK(is_connected_on(g, s) == naive_connected_on(matrix, ids));
                CHECK(dominates(g, s) == naive_dominates(matrix, ids));
            }
        }
    }
}

TEST_CASE("ContractionMap composition") {
    Graph p4 = path(4);
    auto [g1, m1] = delete_vertex(p4, 3);
    auto [g2, m2] = contract_edge(g1, 0, 1);
    ContractionMap total = m1.then(m2);
    CHECK(total.forward[0] == 0);
    CHECK(total.forward[1] == 0);
    CHECK(total.forward[2] == 1);
    CHECK(total.forward[3] == ContractionMap::kDeleted);
    CHECK(total.apply(VertexSet::of(4, {1, 2, 3})) == VertexSet::of(2, {0, 1}));
}
