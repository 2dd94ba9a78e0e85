#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcds/vertex_set.hpp"

namespace mcds {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1, adjacency stored as one
// VertexSet row per vertex. Immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int num_vertices() const { return n_; }
    int num_edges() const {
        int deg_sum = 0;
        for (const auto& row : adj_) deg_sum += row.count();
        return deg_sum / 2;
    }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

private:
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
    friend Graph parse_edge_list(std::istream&);
    friend Graph parse_dimacs(std::istream&);
    friend class GraphBuilder;

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Mutation-free construction helper for generators and tests.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    void add_edge(int u, int v) { g_.add_edge(u, v); }
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    Graph build() && { return std::move(g_); }

private:
    Graph g_;
};

// Records how vertex ids moved across a deletion or contraction. Surviving
// vertices are renumbered densely; contracted partners share an image.
struct ContractionMap {
    static constexpr int kDeleted = -1;
    std::vector<int> forward;  // old id -> new id, or kDeleted
    VertexSet survivors;       // old ids still present (contraction keeps both endpoints "present")
    int new_n = 0;

    static ContractionMap identity(int n);
    ContractionMap then(const ContractionMap& next) const;
    VertexSet apply(const VertexSet& old_ids) const;
};

// "n m" header, then m lines "u v", 0-indexed. Duplicate edges merged.
Graph parse_edge_list(std::istream& in);

// DIMACS-like: "p edge n m" header, "e u v" 1-indexed edge lines, "c" comments.
Graph parse_dimacs(std::istream& in);

int s_degree(const Graph& g, const VertexSet& s, int v);
bool is_connected_on(const Graph& g, const VertexSet& s);
bool dominates(const Graph& g, const VertexSet& s);
int component_count(const Graph& g);
VertexSet cut_vertices(const Graph& g);

std::pair<Graph, ContractionMap> contract_edge(const Graph& g, int u, int v);
std::pair<Graph, ContractionMap> delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);

}  // namespace mcds
