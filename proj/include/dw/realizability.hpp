#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dw/graph.hpp"
#include "dw/isomorphism.hpp"
#include "dw/recognition.hpp"
#include "dw/relation.hpp"

namespace dw {

// Coordinatization of a graph as K_rows [] K_cols: vertices sit on a grid,
// adjacent iff they share a row or a column. Degenerate factors (rows == 1 or
// cols == 1, i.e. a complete graph) are accepted.
struct RookFactorization {
    int rows = 0, cols = 0;
    std::vector<std::array<int, 2>> coords;  // vertex -> (row, col)
};

namespace detail {

// Maximal cliques as bitmasks (Bron-Kerbosch with pivoting), n <= 64.
inline void bron_kerbosch(const std::vector<std::uint64_t>& rows, std::uint64_t r, std::uint64_t p,
                          std::uint64_t x, std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = __builtin_ctzll(px);
    std::uint64_t best = p & ~rows[static_cast<std::size_t>(pivot)];
    for (std::uint64_t rest = px; rest;) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        std::uint64_t cand = p & ~rows[static_cast<std::size_t>(v)];
        if (__builtin_popcountll(cand) > __builtin_popcountll(best)) best = cand;
    }
    while (best) {
        int v = __builtin_ctzll(best);
        best &= best - 1;
        std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(rows, r | bit, p & rows[static_cast<std::size_t>(v)],
                      x & rows[static_cast<std::size_t>(v)], out);
        p &= ~bit;
        x |= bit;
    }
}

inline std::vector<std::uint64_t> maximal_cliques(const Graph& g) {
    std::vector<std::uint64_t> rows = adjacency_bits(g);
    std::vector<std::uint64_t> out;
    std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << g.vertex_count()) - 1;
    if (g.vertex_count() > 0) bron_kerbosch(rows, 0, all, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Finds (rows, cols, coordinates) with h isomorphic to K_rows [] K_cols via
// the identity on the coordinate grid, or nothing. Non-complete rook graphs
// have exactly rows + cols maximal cliques (the rows and the columns), whose
// intersection structure is complete bipartite; the final grid axiom is
// always checked globally.
inline std::optional<RookFactorization> factor_as_rook(const Graph& h) {
    int n = h.vertex_count();
    if (n < 1 || n > 64 || !is_connected(h)) return std::nullopt;

    RookFactorization fact;
    if (h.edge_count() == static_cast<long long>(n) * (n - 1) / 2) {  // complete: K_n [] K_1
        fact.rows = n;
        fact.cols = 1;
        fact.coords.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) fact.coords[static_cast<std::size_t>(v)] = {v, 0};
        return fact;
    }

    std::vector<std::uint64_t> cliques = detail::maximal_cliques(h);
    int c = static_cast<int>(cliques.size());

    // Every vertex lies in exactly one row clique and one column clique.
    for (int v = 0; v < n; ++v) {
        int hits = 0;
        for (const std::uint64_t q : cliques)
            if (q >> v & 1) ++hits;
        if (hits != 2) return std::nullopt;
    }

    // 2-color the clique intersection structure; sides must be internally
    // disjoint and pairwise intersecting in exactly one vertex across sides.
    std::vector<int> side(static_cast<std::size_t>(c), -1);
    std::vector<int> queue{0};
    side[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int a = queue[static_cast<std::size_t>(head)];
        for (int b = 0; b < c; ++b) {
            if (b == a || (cliques[static_cast<std::size_t>(a)] & cliques[static_cast<std::size_t>(b)]) == 0)
                continue;
            if (side[static_cast<std::size_t>(b)] == -1) {
                side[static_cast<std::size_t>(b)] = 1 - side[static_cast<std::size_t>(a)];
                queue.push_back(b);
            } else if (side[static_cast<std::size_t>(b)] == side[static_cast<std::size_t>(a)]) {
                return std::nullopt;
            }
        }
    }
    std::vector<int> rows_idx, cols_idx;
    for (int i = 0; i < c; ++i) {
        if (side[static_cast<std::size_t>(i)] == 0) rows_idx.push_back(i);
        else if (side[static_cast<std::size_t>(i)] == 1) cols_idx.push_back(i);
        else return std::nullopt;  // disconnected intersection structure
    }
    if (rows_idx.empty() || cols_idx.empty()) return std::nullopt;
    for (std::size_t i = 0; i < rows_idx.size(); ++i)
        for (std::size_t j = i + 1; j < rows_idx.size(); ++j)
            if (cliques[static_cast<std::size_t>(rows_idx[i])] & cliques[static_cast<std::size_t>(rows_idx[j])])
                return std::nullopt;
    for (std::size_t i = 0; i < cols_idx.size(); ++i)
        for (std::size_t j = i + 1; j < cols_idx.size(); ++j)
            if (cliques[static_cast<std::size_t>(cols_idx[i])] & cliques[static_cast<std::size_t>(cols_idx[j])])
                return std::nullopt;
    for (int a : rows_idx)
        for (int b : cols_idx)
            if (__builtin_popcountll(cliques[static_cast<std::size_t>(a)] &
                                     cliques[static_cast<std::size_t>(b)]) != 1)
                return std::nullopt;

    int p = static_cast<int>(rows_idx.size()), q = static_cast<int>(cols_idx.size());
    if (static_cast<long long>(p) * q != n) return std::nullopt;

    fact.rows = p;
    fact.cols = q;
    fact.coords.assign(static_cast<std::size_t>(n), {-1, -1});
    for (int ri = 0; ri < p; ++ri)
        for (std::uint64_t mask = cliques[static_cast<std::size_t>(rows_idx[static_cast<std::size_t>(ri)])]; mask;) {
            int v = __builtin_ctzll(mask);
            mask &= mask - 1;
            fact.coords[static_cast<std::size_t>(v)][0] = ri;
        }
    for (int ci = 0; ci < q; ++ci)
        for (std::uint64_t mask = cliques[static_cast<std::size_t>(cols_idx[static_cast<std::size_t>(ci)])]; mask;) {
            int v = __builtin_ctzll(mask);
            mask &= mask - 1;
            fact.coords[static_cast<std::size_t>(v)][1] = ci;
        }
    for (auto [r0, c0] : fact.coords)
        if (r0 < 0 || c0 < 0) return std::nullopt;

    // Grid axiom, checked globally.
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool share = fact.coords[static_cast<std::size_t>(u)][0] == fact.coords[static_cast<std::size_t>(v)][0] ||
                         fact.coords[static_cast<std::size_t>(u)][1] == fact.coords[static_cast<std::size_t>(v)][1];
            if (share != h.adjacent(u, v)) return std::nullopt;
        }
    return fact;
}

// Split of h into the join of two rook-factorizable sides.
struct JoinFactorization {
    std::vector<Vertex> left_vertices, right_vertices;
    RookFactorization left, right;
};

// All ways to write h as a join of two rook graphs. Join sides are unions of
// connected components of the complement, so every 2-grouping of those
// components is tried; each side is then rook-factored.
inline std::vector<JoinFactorization> all_join_factorizations(const Graph& h) {
    std::vector<JoinFactorization> out;
    int n = h.vertex_count();
    if (n < 2 || !is_connected(h)) return out;
    Graph co = complement(h);
    auto comps = connected_components(co).groups();
    int c = static_cast<int>(comps.size());
    if (c < 2 || c > 20) return out;
    for (unsigned mask = 0; mask + 1 < (1u << (c - 1)); ++mask) {
        // left side always holds component 0 (hence vertex 0)
        std::vector<Vertex> left, right;
        for (int i = 0; i < c; ++i) {
            bool on_left = i == 0 || (i >= 1 && (mask >> (i - 1) & 1));
            auto& side = on_left ? left : right;
            side.insert(side.end(), comps[static_cast<std::size_t>(i)].begin(),
                        comps[static_cast<std::size_t>(i)].end());
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        bool cross_ok = true;
        for (Vertex u : left)
            for (Vertex v : right)
                if (!h.adjacent(u, v)) cross_ok = false;
        if (!cross_ok) continue;
        auto lf = factor_as_rook(induced_subgraph(h, left));
        if (!lf) continue;
        auto rf = factor_as_rook(induced_subgraph(h, right));
        if (!rf) continue;
        out.push_back(JoinFactorization{std::move(left), std::move(right), std::move(*lf), std::move(*rf)});
    }
    return out;
}

inline std::optional<JoinFactorization> factor_as_join_of_rooks(const Graph& h) {
    auto all = all_join_factorizations(h);
    if (all.empty()) return std::nullopt;
    return all.front();
}

enum class RealizationCase { ThreeParts, FourParts };

struct RealizationResult {
    bool realizable = false;
    std::optional<RealizationCase> case_tag;
    std::vector<int> part_sizes;            // ascending on success
    std::optional<Graph> reconstructed;     // the complete multipartite witness
    std::vector<Edge> vertex_to_edge;       // relation vertex -> edge of the witness
    std::string failure_reason;
};

// Decides whether the given relation (as its graph representation) equals the
// reflexive complement of Theta for some connected graph whose closure has
// more than one class, and reconstructs the witness. Candidates come from
// rook / join-of-rooks factorizations of the three components; acceptance is
// always by rebuilding the multipartite graph and checking that its relation
// graph is isomorphic to the input.
inline RealizationResult realize_theta_bar(const EdgeRelation& r) {
    RealizationResult res;
    auto comps = connected_components(r.graph).groups();
    if (comps.size() != 3) {
        res.failure_reason = "relation graph has " + std::to_string(comps.size()) +
                             " connected component(s); exactly 3 are required";
        return res;
    }

    std::array<Graph, 3> H;
    for (int i = 0; i < 3; ++i) H[static_cast<std::size_t>(i)] = induced_subgraph(r.graph, comps[static_cast<std::size_t>(i)]);

    auto try_candidate = [&](std::vector<int> parts, RealizationCase tag) -> bool {
        std::sort(parts.begin(), parts.end());
        Graph k = complete_multipartite(parts);
        EdgeRelation rel = relation_graph(k, RelationKind::ThetaBar);
        auto witness = find_isomorphism(r.graph, rel.graph);
        if (!witness) return false;
        res.realizable = true;
        res.case_tag = tag;
        res.part_sizes = std::move(parts);
        res.vertex_to_edge.reserve(witness->size());
        for (Vertex w : *witness) res.vertex_to_edge.push_back(k.edge(w));
        res.reconstructed = std::move(k);
        return true;
    };

    bool had_candidate = false;

    // Three parts: components are the three pairwise rook products.
    std::array<std::optional<RookFactorization>, 3> rook;
    bool all_rook = true;
    for (int i = 0; i < 3; ++i) {
        rook[static_cast<std::size_t>(i)] = factor_as_rook(H[static_cast<std::size_t>(i)]);
        if (!rook[static_cast<std::size_t>(i)]) all_rook = false;
    }
    if (all_rook) {
        std::vector<std::array<int, 3>> cands;
        int perm[3] = {0, 1, 2};
        std::sort(perm, perm + 3);
        do {
            auto pair_of = [&](int i) {
                const auto& f = *rook[static_cast<std::size_t>(perm[i])];
                return std::pair(f.rows, f.cols);
            };
            for (int o0 = 0; o0 < 2; ++o0) {
                auto [a0, b0] = pair_of(0);
                int n1 = o0 ? b0 : a0, n2 = o0 ? a0 : b0;
                for (int o1 = 0; o1 < 2; ++o1) {
                    auto [a1, b1] = pair_of(1);
                    int x = o1 ? b1 : a1, n3 = o1 ? a1 : b1;
                    if (x != n1) continue;
                    auto [a2, b2] = pair_of(2);
                    if (!((a2 == n2 && b2 == n3) || (a2 == n3 && b2 == n2))) continue;
                    std::array<int, 3> c{n1, n2, n3};
                    std::sort(c.begin(), c.end());
                    cands.push_back(c);
                }
            }
        } while (std::next_permutation(perm, perm + 3));
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const auto& c : cands) {
            had_candidate = true;
            if (try_candidate({c[0], c[1], c[2]}, RealizationCase::ThreeParts)) return res;
        }
    }

    // Four parts: components are the three perfect-matching pairings of rook
    // products, joined.
    std::array<std::vector<JoinFactorization>, 3> joins;
    bool all_join = true;
    for (int i = 0; i < 3; ++i) {
        joins[static_cast<std::size_t>(i)] = all_join_factorizations(H[static_cast<std::size_t>(i)]);
        if (joins[static_cast<std::size_t>(i)].empty()) all_join = false;
    }
    if (all_join) {
        auto pairs_of = [](const JoinFactorization& jf) {
            auto norm = [](int a, int b) { return a <= b ? std::pair(a, b) : std::pair(b, a); };
            std::pair<std::pair<int, int>, std::pair<int, int>> pp{norm(jf.left.rows, jf.left.cols),
                                                                   norm(jf.right.rows, jf.right.cols)};
            if (pp.second < pp.first) std::swap(pp.first, pp.second);
            return pp;
        };
        auto has_pairing = [&](int comp, std::pair<int, int> p1, std::pair<int, int> p2) {
            auto norm = [](std::pair<int, int> p) {
                return p.first <= p.second ? p : std::pair(p.second, p.first);
            };
            auto want = std::pair(norm(p1), norm(p2));
            if (want.second < want.first) std::swap(want.first, want.second);
            for (const auto& jf : joins[static_cast<std::size_t>(comp)])
                if (pairs_of(jf) == want) return true;
            return false;
        };
        std::vector<std::array<int, 4>> cands;
        int perm[3] = {0, 1, 2};
        std::sort(perm, perm + 3);
        do {
            for (const auto& jf : joins[static_cast<std::size_t>(perm[0])]) {
                int base[4] = {jf.left.rows, jf.left.cols, jf.right.rows, jf.right.cols};
                for (int flip = 0; flip < 8; ++flip) {
                    int n1 = flip & 1 ? base[1] : base[0];
                    int n2 = flip & 1 ? base[0] : base[1];
                    int n3 = flip & 2 ? base[3] : base[2];
                    int n4 = flip & 2 ? base[2] : base[3];
                    if (flip & 4) {
                        std::swap(n1, n3);
                        std::swap(n2, n4);
                    }
                    if (!has_pairing(perm[1], {n1, n3}, {n2, n4})) continue;
                    if (!has_pairing(perm[2], {n1, n4}, {n2, n3})) continue;
                    std::array<int, 4> c{n1, n2, n3, n4};
                    std::sort(c.begin(), c.end());
                    cands.push_back(c);
                }
            }
        } while (std::next_permutation(perm, perm + 3));
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const auto& c : cands) {
            had_candidate = true;
            if (try_candidate({c[0], c[1], c[2], c[3]}, RealizationCase::FourParts)) return res;
        }
    }

    res.failure_reason = had_candidate
                             ? "no candidate reconstruction matched the input relation graph"
                             : "components are not Cartesian products of complete graphs nor joins "
                               "of such products with consistent part sizes";
    return res;
}

}  // namespace dw
