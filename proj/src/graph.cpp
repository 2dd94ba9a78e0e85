#include "mcds/graph.hpp"

#include <cassert>
#include <sstream>

namespace mcds {

ContractionMap ContractionMap::identity(int n) {
    ContractionMap m;
    m.forward.resize(n);
    for (int i = 0; i < n; ++i) m.forward[i] = i;
    m.survivors = VertexSet::full(n);
    m.new_n = n;
    return m;
}

ContractionMap ContractionMap::then(const ContractionMap& next) const {
    assert(new_n == static_cast<int>(next.forward.size()));
    ContractionMap out;
    out.forward.resize(forward.size());
    out.survivors = VertexSet(static_cast<int>(forward.size()));
    out.new_n = next.new_n;
    for (std::size_t i = 0; i < forward.size(); ++i) {
        int mid = forward[i];
        out.forward[i] = (mid == kDeleted) ? kDeleted : next.forward[mid];
        if (out.forward[i] != kDeleted) out.survivors.insert(static_cast<int>(i));
    }
    return out;
}

VertexSet ContractionMap::apply(const VertexSet& old_ids) const {
    VertexSet out(new_n);
    old_ids.for_each([&](int v) {
        if (forward[v] != kDeleted) out.insert(forward[v]);
    });
    return out;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    Graph g;
    int edges_read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) parse_fail(line_no, "expected header \"n m\"");
            g = Graph(n);
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) parse_fail(line_no, "expected edge \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(line_no, "vertex id out of range");
        if (u == v) parse_fail(line_no, "self-loop");
        g.add_edge(u, v);
        ++edges_read;
    }
    if (n < 0) throw ParseError("empty input");
    if (edges_read != m) throw ParseError("header announced " + std::to_string(m) +
                                          " edges, found " + std::to_string(edges_read));
    return g;
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    Graph g;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string fmt;
            int m;
            if (!(ls >> fmt >> n >> m) || n < 0) parse_fail(line_no, "bad problem line");
            g = Graph(n);
        } else if (tag == "e") {
            if (n < 0) parse_fail(line_no, "edge before problem line");
            int u, v;
            if (!(ls >> u >> v)) parse_fail(line_no, "expected \"e u v\"");
            if (u < 1 || u > n || v < 1 || v > n) parse_fail(line_no, "vertex id out of range");
            if (u == v) parse_fail(line_no, "self-loop");
            g.add_edge(u - 1, v - 1);
        } else {
            parse_fail(line_no, "unknown line tag \"" + tag + "\"");
        }
    }
    if (n < 0) throw ParseError("missing problem line");
    return g;
}

int s_degree(const Graph& g, const VertexSet& s, int v) {
    return g.neighbors(v).intersection_count(s);
}

bool is_connected_on(const Graph& g, const VertexSet& s) {
    int start = s.first();
    if (start < 0) return false;  // empty set is not connected by convention
    VertexSet reached = VertexSet::singleton(g.num_vertices(), start);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next(g.num_vertices());
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        next &= s;
        next -= reached;
        reached |= next;
        frontier = std::move(next);
    }
    return reached.count() == s.count();
}

bool dominates(const Graph& g, const VertexSet& s) {
    VertexSet covered = s;
    s.for_each([&](int v) { covered |= g.neighbors(v); });
    return covered.count() == g.num_vertices();
}

int component_count(const Graph& g) {
    int n = g.num_vertices();
    VertexSet unseen = VertexSet::full(n);
    int comps = 0;
    while (!unseen.empty()) {
        ++comps;
        int start = unseen.first();
        VertexSet reached = VertexSet::singleton(n, start);
        VertexSet frontier = reached;
        while (!frontier.empty()) {
            VertexSet next(n);
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next -= reached;
            reached |= next;
            frontier = std::move(next);
        }
        unseen -= reached;
    }
    return comps;
}

// Iterative DFS lowpoint computation. On a disconnected graph this runs per
// component, so the result is the set of vertices whose removal increases
// the component count.
VertexSet cut_vertices(const Graph& g) {
    int n = g.num_vertices();
    VertexSet cuts(n);
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_nb(n, -1);
    int timer = 0;
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        int root_children = 0;
        disc[root] = low[root] = timer++;
        next_nb[root] = g.neighbors(root).first();
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            int w = next_nb[v];
            if (w < 0) {
                stack.pop_back();
                int p = parent[v];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= disc[p]) cuts.insert(p);
                }
                continue;
            }
            next_nb[v] = g.neighbors(v).next(w);
            if (disc[w] < 0) {
                parent[w] = v;
                if (v == root) ++root_children;
                disc[w] = low[w] = timer++;
                next_nb[w] = g.neighbors(w).first();
                stack.push_back(w);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (root_children >= 2) cuts.insert(root);
    }
    return cuts;
}

std::pair<Graph, ContractionMap> delete_vertex(const Graph& g, int v) {
    int n = g.num_vertices();
    if (v < 0 || v >= n) throw std::invalid_argument("delete_vertex: no such vertex");
    ContractionMap m;
    m.forward.resize(n);
    m.survivors = VertexSet::full(n);
    m.survivors.erase(v);
    m.new_n = n - 1;
    for (int x = 0; x < n; ++x)
        m.forward[x] = (x == v) ? ContractionMap::kDeleted : x - (x > v ? 1 : 0);
    GraphBuilder b(n - 1);
    for (auto [a, c] : g.edges())
        if (a != v && c != v) b.add_edge(m.forward[a], m.forward[c]);
    return {std::move(b).build(), std::move(m)};
}

std::pair<Graph, ContractionMap> contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: uv is not an edge");
    int n = g.num_vertices();
    int keep = std::min(u, v), drop = std::max(u, v);
    ContractionMap m;
    m.forward.resize(n);
    m.survivors = VertexSet::full(n);
    m.new_n = n - 1;
    for (int x = 0; x < n; ++x)
        m.forward[x] = (x == drop) ? m.forward[keep] : x - (x > drop ? 1 : 0);
    m.forward[drop] = m.forward[keep];
    GraphBuilder b(n - 1);
    for (auto [a, c] : g.edges()) {
        int a2 = m.forward[a], c2 = m.forward[c];
        if (a2 != c2 && !b.has_edge(a2, c2)) b.add_edge(a2, c2);
    }
    return {std::move(b).build(), std::move(m)};
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: uv is not an edge");
    GraphBuilder b(g.num_vertices());
    for (auto [a, c] : g.edges())
        if (!((a == u && c == v) || (a == v && c == u))) b.add_edge(a, c);
    return std::move(b).build();
}

}  // namespace mcds
