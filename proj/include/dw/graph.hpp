#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dw {

using Vertex = int;
using EdgeId = int;

// Multiset of part sizes of a complete multipartite graph.
using PartSizes = std::vector<int>;

struct Edge {
    Vertex u = 0, v = 0;  // always u < v
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph with dense vertex indices 0..n-1. Edges are kept
// sorted lexicographically by endpoints; an EdgeId is the position in that
// list and is stable for the lifetime of the value. Immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
        Graph g(n);
        std::vector<Edge> es;
        es.reserve(pairs.size());
        for (auto [a, b] : pairs) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("Graph::from_edges: vertex out of range");
            if (a == b) throw std::invalid_argument("Graph::from_edges: self-loop");
            es.push_back(a < b ? Edge{a, b} : Edge{b, a});
        }
        std::sort(es.begin(), es.end(),
                  [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
        for (std::size_t i = 1; i < es.size(); ++i)
            if (es[i] == es[i - 1]) throw std::invalid_argument("Graph::from_edges: duplicate edge");
        g.edges_ = std::move(es);
        for (const Edge& e : g.edges_) {
            g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }

    const Edge& edge(EdgeId e) const {
        if (e < 0 || e >= edge_count()) throw std::out_of_range("Graph::edge: bad EdgeId");
        return edges_[static_cast<std::size_t>(e)];
    }

    std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
        if (a == b) return std::nullopt;
        Edge key = a < b ? Edge{a, b} : Edge{b, a};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                                   [](const Edge& x, const Edge& y) {
                                       return std::pair(x.u, x.v) < std::pair(y.u, y.v);
                                   });
        if (it != edges_.end() && *it == key) return static_cast<EdgeId>(it - edges_.begin());
        return std::nullopt;
    }

    bool adjacent(Vertex a, Vertex b) const {
        if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b) return false;
        const auto& nb = adj_[static_cast<std::size_t>(a)];
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

// ---- components ----

struct VertexPartition {
    std::vector<int> comp_of;  // component id per vertex, dense, by first occurrence
    int count = 0;

    std::vector<std::vector<Vertex>> groups() const {
        std::vector<std::vector<Vertex>> gs(static_cast<std::size_t>(count));
        for (Vertex v = 0; v < static_cast<int>(comp_of.size()); ++v)
            gs[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])].push_back(v);
        return gs;
    }
};

inline VertexPartition connected_components(const Graph& g) {
    int n = g.vertex_count();
    VertexPartition p;
    p.comp_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (p.comp_of[static_cast<std::size_t>(s)] != -1) continue;
        int id = p.count++;
        stack.push_back(s);
        p.comp_of[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (p.comp_of[static_cast<std::size_t>(w)] == -1) {
                    p.comp_of[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return p;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).count == 1;
}

// ---- derived graphs ----

// Induced subgraph on the given vertices; vertex i of the result corresponds
// to the i-th vertex of the (sorted, deduplicated) subset.
inline Graph induced_subgraph(const Graph& g, std::vector<Vertex> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (Vertex v : verts)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j]))
                es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph::from_edges(static_cast<int>(verts.size()), es);
}

inline Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const Edge& e : g.edges()) es.emplace_back(e.u, e.v);
    int off = g.vertex_count();
    for (const Edge& e : h.edges()) es.emplace_back(e.u + off, e.v + off);
    return Graph::from_edges(g.vertex_count() + h.vertex_count(), es);
}

// ---- generators ----

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph::from_edges(n, es);
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, es);
}

// star(n) = K_{1,n}: center 0 plus n leaves, n+1 vertices in total.
inline Graph star(int n) {
    if (n < 1) throw std::invalid_argument("star: n must be >= 1");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex v = 1; v <= n; ++v) es.emplace_back(0, v);
    return Graph::from_edges(n + 1, es);
}

// Vertices are grouped consecutively by part: part i occupies the index range
// [sum of earlier sizes, ...).
inline Graph complete_multipartite(const PartSizes& parts) {
    if (parts.empty()) throw std::invalid_argument("complete_multipartite: need at least one part");
    for (int s : parts)
        if (s < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i)
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
    int n = static_cast<int>(part_of.size());
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
                es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

// Cartesian product with the factor coordinates retained per vertex.
struct ProductGraph {
    Graph graph;
    std::vector<std::pair<Vertex, Vertex>> coords;  // vertex -> (g-vertex, h-vertex)
};

inline ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    int gn = g.vertex_count(), hn = h.vertex_count();
    ProductGraph out;
    out.coords.reserve(static_cast<std::size_t>(gn) * static_cast<std::size_t>(hn));
    auto id = [hn](Vertex a, Vertex x) { return a * hn + x; };
    for (Vertex a = 0; a < gn; ++a)
        for (Vertex x = 0; x < hn; ++x) out.coords.emplace_back(a, x);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex a = 0; a < gn; ++a)
        for (const Edge& e : h.edges()) es.emplace_back(id(a, e.u), id(a, e.v));
    for (const Edge& e : g.edges())
        for (Vertex x = 0; x < hn; ++x) es.emplace_back(id(e.u, x), id(e.v, x));
    out.graph = Graph::from_edges(gn * hn, es);
    return out;
}

inline Graph join(const Graph& g, const Graph& h) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const Edge& e : g.edges()) es.emplace_back(e.u, e.v);
    int off = g.vertex_count();
    for (const Edge& e : h.edges()) es.emplace_back(e.u + off, e.v + off);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < h.vertex_count(); ++v) es.emplace_back(u, v + off);
    return Graph::from_edges(g.vertex_count() + h.vertex_count(), es);
}

// ---- small helpers ----

inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

// Adjacency rows as bitmasks; requires n <= 64.
inline std::vector<std::uint64_t> adjacency_bits(const Graph& g) {
    if (g.vertex_count() > 64) throw std::invalid_argument("adjacency_bits: n > 64");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        rows[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        rows[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    return rows;
}

// Calls fn with each ascending k-subset of {0..n-1}.
template <typename F>
void for_each_subset(int n, int k, F&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(static_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace dw
