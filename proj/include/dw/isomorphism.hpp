#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dw/graph.hpp"

namespace dw {

// Degree-based color refinement. Colors are ranks of globally sorted
// signatures, so isomorphic graphs get identical color vectors up to the
// isomorphism and color values are comparable across graphs.
inline std::vector<int> wl_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> col(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) col[static_cast<std::size_t>(v)] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(col[static_cast<std::size_t>(v)]);
            for (Vertex w : g.neighbors(v)) s.push_back(col[static_cast<std::size_t>(w)]);
            std::sort(s.begin() + 1, s.end());
        }
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
        });
        std::vector<int> next(static_cast<std::size_t>(n));
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] !=
                             sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])])
                ++c;
            next[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = c;
        }
        if (next == col) break;
        col.swap(next);
    }
    return col;
}

// Backtracking search for an edge-preserving bijection g -> h, with degree
// and color-refinement pruning. Intended for small graphs; may be slow well
// above a dozen vertices.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<Vertex>{};
    if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;

    std::vector<int> ca = wl_colors(g), cb = wl_colors(h);
    {
        std::vector<int> sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    std::vector<int> color_freq;
    for (int c : ca) {
        if (static_cast<std::size_t>(c) >= color_freq.size()) color_freq.resize(static_cast<std::size_t>(c) + 1, 0);
        ++color_freq[static_cast<std::size_t>(c)];
    }

    // Order g's vertices so each one (after the first of its component) has a
    // previously placed neighbor: strongest adjacency pruning first.
    std::vector<Vertex> order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<int> placed_nb(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            if (best == -1) {
                best = v;
                continue;
            }
            auto key = [&](Vertex x) {
                return std::tuple(-placed_nb[static_cast<std::size_t>(x)], -g.degree(x),
                                  color_freq[static_cast<std::size_t>(ca[static_cast<std::size_t>(x)])], x);
            };
            if (key(v) < key(best)) best = v;
        }
        order.push_back(best);
        placed[static_cast<std::size_t>(best)] = 1;
        for (Vertex w : g.neighbors(best)) ++placed_nb[static_cast<std::size_t>(w)];
    }

    std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto consistent = [&](Vertex u, Vertex w, int upto) {
        for (int i = 0; i < upto; ++i) {
            Vertex u2 = order[static_cast<std::size_t>(i)];
            if (g.adjacent(u, u2) != h.adjacent(w, map[static_cast<std::size_t>(u2)])) return false;
        }
        return true;
    };

    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    int depth = 0;
    while (depth >= 0) {
        if (depth == n) return map;
        Vertex u = order[static_cast<std::size_t>(depth)];
        bool advanced = false;
        for (Vertex w = pos[static_cast<std::size_t>(depth)]; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (cb[static_cast<std::size_t>(w)] != ca[static_cast<std::size_t>(u)]) continue;
            if (h.degree(w) != g.degree(u)) continue;
            if (!consistent(u, w, depth)) continue;
            map[static_cast<std::size_t>(u)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            pos[static_cast<std::size_t>(depth)] = w + 1;
            ++depth;
            if (depth < n) pos[static_cast<std::size_t>(depth)] = 0;
            advanced = true;
            break;
        }
        if (!advanced) {
            pos[static_cast<std::size_t>(depth)] = 0;
            --depth;
            if (depth >= 0) {
                Vertex u2 = order[static_cast<std::size_t>(depth)];
                used[static_cast<std::size_t>(map[static_cast<std::size_t>(u2)])] = 0;
                map[static_cast<std::size_t>(u2)] = -1;
            }
        }
    }
    return std::nullopt;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
    return find_isomorphism(g, h).has_value();
}

// Canonical form for n <= 11: minimum upper-triangle adjacency bitstring over
// all relabelings compatible with the color-refinement classes. Pair (i,j),
// i<j, maps to bit j*(j-1)/2 + i of the result.
inline std::uint64_t canonical_bits(const Graph& g) {
    int n = g.vertex_count();
    if (n > 11) throw std::invalid_argument("canonical_bits: n > 11");
    if (n <= 1) return 0;

    std::vector<int> col = wl_colors(g);
    std::vector<Vertex> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](Vertex a, Vertex b) {
        return std::pair(col[static_cast<std::size_t>(a)], a) < std::pair(col[static_cast<std::size_t>(b)], b);
    });

    // Class boundaries in the sorted vertex list.
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && col[static_cast<std::size_t>(verts[static_cast<std::size_t>(j)])] ==
                            col[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])])
            ++j;
        classes.emplace_back(i, j);
        i = j;
    }

    std::vector<std::uint64_t> rows = adjacency_bits(g);
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<Vertex> lab = verts;

    auto evaluate = [&]() {
        std::uint64_t bits = 0;
        int idx = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if (rows[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] >>
                        lab[static_cast<std::size_t>(j)] &
                    1)
                    bits |= std::uint64_t{1} << idx;
        best = std::min(best, bits);
    };

    // Product of per-class permutations.
    auto rec = [&](auto&& self, std::size_t ci) -> void {
        if (ci == classes.size()) {
            evaluate();
            return;
        }
        auto [lo, hi] = classes[ci];
        std::sort(lab.begin() + lo, lab.begin() + hi);
        do {
            self(self, ci + 1);
        } while (std::next_permutation(lab.begin() + lo, lab.begin() + hi));
    };
    rec(rec, 0);
    return best;
}

// Hash key combining vertex count and canonical bits; collision free for
// n <= 11.
inline std::uint64_t canonical_key(const Graph& g) {
    return canonical_bits(g) | (static_cast<std::uint64_t>(g.vertex_count()) << 56);
}

}  // namespace dw
