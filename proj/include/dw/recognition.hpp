#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dw/distance.hpp"
#include "dw/graph.hpp"
#include "dw/patterns.hpp"
#include "dw/relation.hpp"

namespace dw {

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

// ---- block graphs ----

// Biconnected components (blocks) as vertex sets, via an iterative
// articulation-point DFS with an edge stack.
inline std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<Vertex>> blocks;
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> nb_pos(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    int timer = 0;

    auto pop_block = [&](Vertex u, Vertex v) {
        std::vector<Vertex> verts;
        auto add = [&verts](Vertex x) {
            if (std::find(verts.begin(), verts.end(), x) == verts.end()) verts.push_back(x);
        };
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            add(a);
            add(b);
            if (a == u && b == v) break;
        }
        std::sort(verts.begin(), verts.end());
        blocks.push_back(std::move(verts));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Vertex> stack{root};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Vertex v = stack.back();
            const auto& nbs = g.neighbors(v);
            if (nb_pos[static_cast<std::size_t>(v)] < nbs.size()) {
                Vertex w = nbs[nb_pos[static_cast<std::size_t>(v)]++];
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    parent[static_cast<std::size_t>(w)] = v;
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    edge_stack.emplace_back(v, w);
                    stack.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(v)] &&
                           disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
                    edge_stack.emplace_back(v, w);
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                stack.pop_back();
                Vertex p = parent[static_cast<std::size_t>(v)];
                if (p != -1) {
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                    if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) pop_block(p, v);
                }
            }
        }
    }
    return blocks;
}

inline bool subset_is_clique(const Graph& g, const std::vector<Vertex>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.adjacent(verts[i], verts[j])) return false;
    return true;
}

inline std::optional<std::vector<Vertex>> find_non_clique_block(const Graph& g) {
    for (auto& block : biconnected_blocks(g))
        if (!subset_is_clique(g, block)) return block;
    return std::nullopt;
}

// Structural test: every maximal biconnected component is a clique. A
// disconnected input passes iff every component does.
inline bool is_block_graph(const Graph& g) {
    return !find_non_clique_block(g).has_value();
}

// Oracle: for all distinct x,y,u,v the largest two of the three pairing sums
// of distances are equal. Connected input only.
inline bool block_graph_four_point(const Graph& g) {
    DistanceMatrix d = bfs_all_pairs(g);
    bool ok = true;
    for_each_subset(g.vertex_count(), 4, [&](const std::vector<int>& q) {
        if (!ok) return;
        Vertex x = q[0], y = q[1], u = q[2], v = q[3];
        ExtNat s[3] = {d(x, y) + d(u, v), d(x, u) + d(y, v), d(x, v) + d(y, u)};
        std::sort(s, s + 3);
        if (s[1] != s[2]) ok = false;
    });
    return ok;
}

// Oracle: no cycle of length >= 4 and no diamond occurs as an isometric
// subgraph. Exhaustive subset scan, intended for small graphs.
inline bool block_graph_no_isometric_cycle_or_diamond(const Graph& g) {
    int n = g.vertex_count();
    const Graph& dia = pattern_graph("diamond");
    bool ok = true;
    for (int k = 4; k <= n && ok; ++k) {
        for_each_subset(n, k, [&](const std::vector<int>& subset) {
            if (!ok) return;
            Graph h = induced_subgraph(g, subset);
            bool cycle_shape = k >= 4 && h.edge_count() == k && is_connected(h) &&
                               degree_sequence(h) == std::vector<int>(static_cast<std::size_t>(k), 2);
            bool diamond_shape = k == 4 && is_isomorphic(h, dia);
            if ((cycle_shape || diamond_shape) && is_isometric_subgraph(g, subset)) ok = false;
        });
    }
    return ok;
}

// Calls fn(e, f) for every unordered pair of non-adjacent edges.
template <typename F>
void for_each_nonadjacent_pair(const Graph& g, F&& fn) {
    int m = g.edge_count();
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& a = g.edge(e);
        for (EdgeId f = e + 1; f < m; ++f) {
            const Edge& b = g.edge(f);
            if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) fn(e, f);
        }
    }
}

// Every pair of non-adjacent edges is in the reflexive complement. Agrees
// with is_block_graph on connected inputs.
inline bool block_graph_via_theta_bar(const Graph& g) {
    DistanceMatrix d = bfs_all_pairs(g);
    bool ok = true;
    for_each_nonadjacent_pair(g, [&](EdgeId e, EdgeId f) {
        if (ok && !theta_bar_related(g, d, e, f)) ok = false;
    });
    return ok;
}

// diam <= 2 iff no non-adjacent edge pair realizes three distinct endpoint
// distances (connected input). Both routes are evaluated; a mismatch would
// falsify the characterization, so it is reported loudly. Without a
// non-adjacent pair, or on disconnected input, falls back to the direct
// diameter.
inline bool diameter_le_2_via_delta(const Graph& g) {
    DistanceMatrix d = bfs_all_pairs(g);
    ExtNat diam(0);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) diam = std::max(diam, d(u, v));
    bool direct = diam <= ExtNat(2);
    if (!is_connected(g)) return direct;

    bool has_pair = false, no_delta3 = true;
    for_each_nonadjacent_pair(g, [&](EdgeId e, EdgeId f) {
        has_pair = true;
        if (delta_set(g, d, e, f).size() == 3) no_delta3 = false;
    });
    if (has_pair && no_delta3 != direct)
        throw std::logic_error("diameter_le_2_via_delta: characterization mismatch");
    return has_pair ? no_delta3 : direct;
}

inline std::optional<std::pair<EdgeId, EdgeId>> find_nonadjacent_delta3_pair(const Graph& g) {
    DistanceMatrix d = bfs_all_pairs(g);
    std::optional<std::pair<EdgeId, EdgeId>> hit;
    for_each_nonadjacent_pair(g, [&](EdgeId e, EdgeId f) {
        if (!hit && delta_set(g, d, e, f).size() == 3) hit = std::pair(e, f);
    });
    return hit;
}

// Every pair of non-adjacent edges is Theta-related, equivalently (for
// connected input) diam <= 2 and no induced K4, 2K2 or paw. Both routes
// evaluated and compared.
inline bool all_nonadjacent_theta(const Graph& g) {
    DistanceMatrix d = bfs_all_pairs(g);
    bool direct = true;
    for_each_nonadjacent_pair(g, [&](EdgeId e, EdgeId f) {
        if (direct && !theta_related(g, d, e, f)) direct = false;
    });
    if (!is_connected(g)) return direct;
    bool structural = diameter_le_2_via_delta(g) && !contains_induced(g, "K4") &&
                      !contains_induced(g, "2K2") && !contains_induced(g, "paw");
    if (direct != structural)
        throw std::logic_error("all_nonadjacent_theta: characterization mismatch");
    return direct;
}

// ---- complete multipartite recognition ----

// Parts (maximal independent sets) ordered by smallest vertex, or nothing if
// the complement is not a disjoint union of cliques.
inline std::optional<std::vector<std::vector<Vertex>>> complete_multipartite_parts(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    Graph co = complement(g);
    auto groups = connected_components(co).groups();
    for (const auto& part : groups)
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (g.adjacent(part[i], part[j])) return std::nullopt;
    return groups;
}

// Part sizes sorted descending, or nothing.
inline std::optional<PartSizes> is_complete_multipartite(const Graph& g) {
    auto parts = complete_multipartite_parts(g);
    if (!parts) return std::nullopt;
    PartSizes sizes;
    for (const auto& p : *parts) sizes.push_back(static_cast<int>(p.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

// ---- distance-free route to the reflexive-complement closure ----

// Whether the closure of the reflexive complement has a single class, decided
// from small induced subgraphs only (no distances). Connected input.
//   n <= 4: anything except K3, diamond, K4.
//   n >= 5: K3-free, or some induced K5 / paw / P4.
inline bool theta_bar_star_is_1trivial(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 4) {
        if (n == 3 && g.edge_count() == 3) return false;                       // K3
        if (n == 4 && g.edge_count() == 6) return false;                       // K4
        if (n == 4 && g.edge_count() == 5) return false;                       // diamond
        return true;
    }
    if (!contains_induced(g, "K3")) return true;
    return contains_induced(g, "K5").has_value() || contains_induced(g, "paw").has_value() ||
           contains_induced(g, "P4").has_value();
}

// Classes of the closure of the reflexive complement without computing any
// distances. More than one class happens only for a complete multipartite
// graph with 3 or 4 parts (up to isolated vertices); then the classes are
// fixed unions of part-pair edge sets:
//   3 parts: V1V2 | V1V3 | V2V3
//   4 parts: V1V2+V3V4 | V1V3+V2V4 | V1V4+V2V3
// with parts ordered by smallest vertex. Class ids follow that order, which
// coincides with first-occurrence order of the edge list.
inline EdgePartition theta_bar_classes_distance_free(const Graph& g) {
    int m = g.edge_count();
    EdgePartition p;
    if (m == 0) return p;
    p.class_of.assign(static_cast<std::size_t>(m), 0);
    p.count = 1;

    VertexPartition comps = connected_components(g);
    std::vector<char> has_edge(static_cast<std::size_t>(comps.count), 0);
    for (const Edge& e : g.edges()) has_edge[static_cast<std::size_t>(comps.comp_of[static_cast<std::size_t>(e.u)])] = 1;
    int bearing = 0, bearing_id = -1;
    for (int c = 0; c < comps.count; ++c)
        if (has_edge[static_cast<std::size_t>(c)]) {
            ++bearing;
            bearing_id = c;
        }
    if (bearing > 1) return p;  // edges spread over components: one class

    std::vector<Vertex> cverts;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (comps.comp_of[static_cast<std::size_t>(v)] == bearing_id) cverts.push_back(v);
    Graph h = induced_subgraph(g, cverts);
    auto parts = complete_multipartite_parts(h);
    if (!parts || (parts->size() != 3 && parts->size() != 4)) return p;

    std::vector<int> part_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t pi = 0; pi < parts->size(); ++pi)
        for (Vertex local : (*parts)[pi]) part_of[static_cast<std::size_t>(cverts[static_cast<std::size_t>(local)])] = static_cast<int>(pi);

    auto pair_class3 = [](int i, int j) {  // (0,1)->0 (0,2)->1 (1,2)->2
        return i + j - 1;
    };
    auto pair_class4 = [](int i, int j) {  // pairings (01|23)->0 (02|13)->1 (03|12)->2
        if (i > j) std::swap(i, j);
        if ((i == 0 && j == 1) || (i == 2 && j == 3)) return 0;
        if ((i == 0 && j == 2) || (i == 1 && j == 3)) return 1;
        return 2;
    };

    for (EdgeId e = 0; e < m; ++e) {
        int i = part_of[static_cast<std::size_t>(g.edge(e).u)];
        int j = part_of[static_cast<std::size_t>(g.edge(e).v)];
        if (i > j) std::swap(i, j);
        p.class_of[static_cast<std::size_t>(e)] =
            parts->size() == 3 ? pair_class3(i, j) : pair_class4(i, j);
    }
    p.count = 3;
    return p;
}

// ---- aggregate report ----

struct RecognitionReport {
    int n = 0;
    int m = 0;
    bool connected = false;
    bool tree = false;
    bool block_graph = false;
    std::optional<std::vector<Vertex>> non_clique_block;
    std::optional<PartSizes> multipartite_parts;  // sorted descending
    bool paw_free = false;
    std::optional<std::vector<Vertex>> paw_witness;
    bool k3_free = false;
    std::optional<std::vector<Vertex>> k3_witness;
    ExtNat diam;
    bool diameter_le_2 = false;
    bool theta_bar_star_trivial = false;
    int theta_bar_class_count = 0;        // 0 only for edgeless input
    std::vector<int> theta_bar_class_sizes;  // ascending
};

inline RecognitionReport recognize(const Graph& g) {
    RecognitionReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.connected = is_connected(g);
    r.tree = is_tree(g);
    r.non_clique_block = find_non_clique_block(g);
    r.block_graph = !r.non_clique_block.has_value();
    r.multipartite_parts = is_complete_multipartite(g);
    r.paw_witness = contains_induced(g, "paw");
    r.paw_free = !r.paw_witness.has_value();
    r.k3_witness = contains_induced(g, "K3");
    r.k3_free = !r.k3_witness.has_value();
    r.diam = diameter(g);
    r.diameter_le_2 = r.diam <= ExtNat(2);
    EdgePartition classes = theta_bar_classes_distance_free(g);
    r.theta_bar_class_count = classes.count;
    r.theta_bar_class_sizes = classes.class_sizes();
    std::sort(r.theta_bar_class_sizes.begin(), r.theta_bar_class_sizes.end());
    r.theta_bar_star_trivial = classes.count <= 1;
    return r;
}

}  // namespace dw
