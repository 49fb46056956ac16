#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dw/distance.hpp"
#include "dw/enumerate.hpp"
#include "dw/graph.hpp"
#include "dw/graph6.hpp"
#include "dw/patterns.hpp"
#include "dw/recognition.hpp"
#include "dw/relation.hpp"

namespace dw {

// Everything the checkers need about one corpus graph, computed once.
struct GraphContext {
    Graph g;
    std::string g6;
    int n = 0, m = 0;
    bool connected = false;
    DistanceMatrix dist;
    EdgeRelation theta, thetabar;
    EdgePartition theta_classes, thetabar_classes;

    explicit GraphContext(const Graph& graph)
        : g(graph),
          g6(emit_graph6(graph)),
          n(graph.vertex_count()),
          m(graph.edge_count()),
          connected(is_connected(graph)),
          dist(bfs_all_pairs(graph)),
          theta(relation_graph(graph, dist, RelationKind::Theta)),
          thetabar(relation_graph(graph, dist, RelationKind::ThetaBar)),
          theta_classes(closure_classes(theta)),
          thetabar_classes(closure_classes(thetabar)) {}
};

// One registered property: `check` returns a failure detail, or nothing when
// the graph passes. `applies` narrows the corpus (connectivity and the like).
struct Claim {
    std::string id;
    std::string description;
    std::function<bool(const GraphContext&)> applies;
    std::function<std::optional<std::string>(const GraphContext&)> check;
};

struct Counterexample {
    std::string graph6;
    std::string detail;
};

struct ClaimResult {
    std::string id;
    std::string description;
    long checked = 0;
    std::vector<Counterexample> failures;

    bool passed() const { return failures.empty(); }
};

struct PropertyReport {
    long corpus_size = 0;
    std::vector<ClaimResult> claims;

    bool all_passed() const {
        for (const auto& c : claims)
            if (!c.passed()) return false;
        return true;
    }
};

namespace detail {

inline std::string vertices_to_string(const std::vector<Vertex>& vs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << "}";
    return os.str();
}

inline std::string edge_to_string(const Graph& g, EdgeId e) {
    return std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
}

inline std::string pair_detail(const GraphContext& c, EdgeId e, EdgeId f, const std::string& what) {
    return "edges " + edge_to_string(c.g, e) + " and " + edge_to_string(c.g, f) + ": " + what;
}

// Edge pairs lying in a common triangle.
inline bool in_common_triangle(const Graph& g, EdgeId e, EdgeId f) {
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    Vertex shared = -1, x = -1, y = -1;
    if (a.u == b.u) shared = a.u, x = a.v, y = b.v;
    else if (a.u == b.v) shared = a.u, x = a.v, y = b.u;
    else if (a.v == b.u) shared = a.v, x = a.u, y = b.v;
    else if (a.v == b.v) shared = a.v, x = a.u, y = b.u;
    else return false;
    (void)shared;
    return g.adjacent(x, y);
}

// All simple induced paths (as vertex sequences, both directions pruned).
template <typename F>
void for_each_induced_path(const Graph& g, F&& fn) {
    int n = g.vertex_count();
    std::vector<Vertex> path;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, Vertex last) -> void {
        if (path.size() >= 3 && path.front() < path.back()) fn(path);
        for (Vertex w : g.neighbors(last)) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            bool induced = true;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (g.adjacent(path[i], w)) {
                    induced = false;
                    break;
                }
            if (!induced) continue;
            path.push_back(w);
            on_path[static_cast<std::size_t>(w)] = 1;
            self(self, w);
            on_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path.assign(static_cast<std::size_t>(n), 0);
        on_path[static_cast<std::size_t>(s)] = 1;
        rec(rec, s);
    }
}

inline bool has_bridge(const Graph& g) {
    int base = connected_components(g).count;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::vector<std::pair<Vertex, Vertex>> rest;
        for (EdgeId f = 0; f < g.edge_count(); ++f)
            if (f != e) rest.emplace_back(g.edge(f).u, g.edge(f).v);
        if (connected_components(Graph::from_edges(g.vertex_count(), rest)).count > base) return true;
    }
    return false;
}

inline bool is_star_shape(const Graph& g) {
    if (g.edge_count() != g.vertex_count() - 1 || !is_connected(g)) return false;
    int big = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 1) ++big;
    return big <= 1;
}

}  // namespace detail

// The registered claim table: the single source of coverage for the verified
// statements. Ordered; ids are stable.
inline const std::vector<Claim>& builtin_claims() {
    using detail::edge_to_string;
    using detail::pair_detail;
    using detail::vertices_to_string;

    static const std::vector<Claim> claims = [] {
        std::vector<Claim> cs;
        auto always = [](const GraphContext&) { return true; };
        auto connected = [](const GraphContext& c) { return c.connected; };
        auto connected_with_edges = [](const GraphContext& c) { return c.connected && c.m >= 1; };
        auto with_edges = [](const GraphContext& c) { return c.m >= 1; };

        cs.push_back(Claim{
            "edge-endpoint-distance-gap",
            "for every edge {a,b} and vertex x with finite distances, |d(x,a)-d(x,b)| <= 1",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                for (EdgeId e = 0; e < c.m; ++e) {
                    const Edge& ed = c.g.edge(e);
                    for (Vertex x = 0; x < c.n; ++x) {
                        ExtNat da = c.dist(x, ed.u), db = c.dist(x, ed.v);
                        if (!da.is_finite() || !db.is_finite()) continue;
                        if (finite_gap(da, db) > 1)
                            return "edge " + edge_to_string(c.g, e) + ", vertex " + std::to_string(x);
                    }
                }
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "intersecting-edges-star-or-triangle",
            "connected graphs whose edges pairwise intersect are exactly the stars and the triangle",
            connected_with_edges,
            [](const GraphContext& c) -> std::optional<std::string> {
                bool pairwise = true;
                for (EdgeId e = 0; e < c.m && pairwise; ++e)
                    for (EdgeId f = e + 1; f < c.m && pairwise; ++f) {
                        const Edge& a = c.g.edge(e);
                        const Edge& b = c.g.edge(f);
                        if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) pairwise = false;
                    }
                bool star_or_k3 = detail::is_star_shape(c.g) || (c.n == 3 && c.m == 3);
                if (pairwise != star_or_k3)
                    return std::string("pairwise-intersecting=") + (pairwise ? "true" : "false") +
                           " but star-or-triangle=" + (star_or_k3 ? "true" : "false");
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "paw-free-components-k3free-or-multipartite",
            "paw-free iff every component is triangle-free or complete multipartite",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                bool paw_free = !contains_induced(c.g, "paw").has_value();
                bool rhs = true;
                for (const auto& comp : connected_components(c.g).groups()) {
                    Graph h = induced_subgraph(c.g, comp);
                    if (!contains_induced(h, "K3") || is_complete_multipartite(h)) continue;
                    rhs = false;
                    break;
                }
                if (paw_free != rhs)
                    return std::string("paw-free=") + (paw_free ? "true" : "false") +
                           " rhs=" + (rhs ? "true" : "false");
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "delta-set-bounds",
            "delta sets have 1..3 values inside {k,k+1,k+2}; two values are consecutive; adjacent "
            "edges give {0,1} in a triangle and {0,1,2} otherwise; cross-component pairs give {inf}",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                for (EdgeId e = 0; e < c.m; ++e)
                    for (EdgeId f = e; f < c.m; ++f) {
                        DeltaSet d = delta_set(c.g, c.dist, e, f);
                        if (!d.max().is_finite()) {
                            if (d.size() != 1)
                                return pair_detail(c, e, f, "cross-component delta not {inf}");
                            continue;
                        }
                        if (d.size() < 1 || d.size() > 3)
                            return pair_detail(c, e, f, "delta size out of range");
                        if (d.max().value() - d.min().value() > 2)
                            return pair_detail(c, e, f, "delta spread exceeds 2");
                        if (d.size() == 2 && !d.is_consecutive_pair())
                            return pair_detail(c, e, f, "two-element delta not consecutive");
                        if (e == f) {
                            if (d != DeltaSet::from({ExtNat(0), ExtNat(1)}))
                                return pair_detail(c, e, f, "reflexive delta not {0,1}");
                            continue;
                        }
                        const Edge& a = c.g.edge(e);
                        const Edge& b = c.g.edge(f);
                        bool adjacent_pair =
                            a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
                        if (!adjacent_pair) continue;
                        bool tri = detail::in_common_triangle(c.g, e, f);
                        bool rel = theta_related(c.g, c.dist, e, f);
                        if (tri && (d != DeltaSet::from({ExtNat(0), ExtNat(1)}) || !rel))
                            return pair_detail(c, e, f, "triangle pair: expected {0,1} and related");
                        if (!tri && (d != DeltaSet::from({ExtNat(0), ExtNat(1), ExtNat(2)}) || rel))
                            return pair_detail(c, e, f, "open pair: expected {0,1,2} and unrelated");
                    }
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "theta-implies-delta-pair",
            "related edges always have a two-element consecutive delta set",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                for (EdgeId e = 0; e < c.m; ++e)
                    for (EdgeId f = e; f < c.m; ++f) {
                        if (!theta_related(c.g, c.dist, e, f)) continue;
                        DeltaSet d = delta_set(c.g, c.dist, e, f);
                        if (!d.is_consecutive_pair())
                            return pair_detail(c, e, f, "related but delta not {k,k+1}");
                    }
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "theta-labeling-invariance",
            "the relation verdict does not depend on the endpoint labeling of either edge",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                for (EdgeId e = 0; e < c.m; ++e)
                    for (EdgeId f = e + 1; f < c.m; ++f) {
                        const Edge& a = c.g.edge(e);
                        const Edge& b = c.g.edge(f);
                        ExtNat d1 = c.dist(a.u, b.u), d2 = c.dist(a.v, b.v);
                        ExtNat d3 = c.dist(a.u, b.v), d4 = c.dist(a.v, b.u);
                        bool t1 = theta_from_distances(d1, d2, d3, d4);
                        bool t2 = theta_from_distances(d4, d3, d2, d1);
                        bool t3 = theta_from_distances(d3, d4, d1, d2);
                        bool t4 = theta_from_distances(d2, d1, d4, d3);
                        if (t1 != t2 || t1 != t3 || t1 != t4)
                            return pair_detail(c, e, f, "labelings disagree");
                    }
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "relation-and-complement-partition-pairs",
            "the relation and its reflexive complement split the edge pairs: both hold exactly on "
            "the diagonal, exactly one holds elsewhere",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                for (EdgeId e = 0; e < c.m; ++e) {
                    if (!theta_related(c.g, c.dist, e, e) || !theta_bar_related(c.g, c.dist, e, e))
                        return "edge " + edge_to_string(c.g, e) + ": diagonal not reflexive";
                    for (EdgeId f = e + 1; f < c.m; ++f) {
                        bool t = theta_related(c.g, c.dist, e, f);
                        bool tb = theta_bar_related(c.g, c.dist, e, f);
                        if (t == tb) return pair_detail(c, e, f, "not exactly one of the relations");
                    }
                }
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "closure-duality-one-trivial",
            "if one closure has several classes the other has one; a closed relation with a proper "
            "class count forces the complement closure to be one-class and not closed",
            with_edges,
            [](const GraphContext& c) -> std::optional<std::string> {
                int kt = c.theta_classes.count, kb = c.thetabar_classes.count;
                if (kt > 1 && kb != 1) return "both closures have several classes";
                if (kb > 1 && kt != 1) return "both closures have several classes";
                if (is_closed(c.theta) && kt > 1 && kt < c.m) {
                    if (kb != 1) return "complement closure not one-class";
                    if (is_closed(c.thetabar)) return "complement unexpectedly closed";
                }
                if (is_closed(c.thetabar) && kb > 1 && kb < c.m) {
                    if (kt != 1) return "relation closure not one-class";
                    if (is_closed(c.theta)) return "relation unexpectedly closed";
                }
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "closed-iff-clique-components",
            "a relation equals its transitive closure exactly when same-class distinct edges are "
            "always directly related",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                for (const EdgeRelation* r : {&c.theta, &c.thetabar}) {
                    EdgePartition p = closure_classes(*r);
                    bool transitive = true;
                    for (EdgeId e = 0; e < c.m && transitive; ++e)
                        for (EdgeId f = e + 1; f < c.m && transitive; ++f)
                            if (p.class_of[static_cast<std::size_t>(e)] ==
                                    p.class_of[static_cast<std::size_t>(f)] &&
                                !r->related(e, f))
                                transitive = false;
                    if (transitive != is_closed(*r))
                        return std::string("closure fixpoint check disagrees (") +
                               (r == &c.theta ? "relation" : "complement") + ")";
                }
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "induced-path-edges-same-class",
            "all edges of an induced path fall in one class of the complement closure",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                std::optional<std::string> fail;
                detail::for_each_induced_path(c.g, [&](const std::vector<Vertex>& pathv) {
                    if (fail) return;
                    int cls = -1;
                    for (std::size_t i = 0; i + 1 < pathv.size(); ++i) {
                        EdgeId e = *c.g.edge_id(pathv[i], pathv[i + 1]);
                        int ec = c.thetabar_classes.class_of[static_cast<std::size_t>(e)];
                        if (cls == -1) cls = ec;
                        else if (cls != ec) fail = "induced path " + vertices_to_string(pathv);
                    }
                });
                return fail;
            }});

        cs.push_back(Claim{
            "cut-edge-forces-single-class",
            "a bridge forces the complement closure into a single class",
            with_edges,
            [](const GraphContext& c) -> std::optional<std::string> {
                if (detail::has_bridge(c.g) && c.thetabar_classes.count != 1)
                    return "bridge present but " + std::to_string(c.thetabar_classes.count) +
                           " classes";
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "no-common-triangle-or-diamond-same-class",
            "distinct edges lying in no common triangle and no common induced diamond share a "
            "complement-closure class",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                std::vector<std::pair<EdgeId, EdgeId>> diamond_pairs;
                for (const auto& occ : induced_occurrences(c.g, pattern_graph("diamond"))) {
                    Graph h = induced_subgraph(c.g, occ);
                    std::vector<EdgeId> ids;
                    for (const Edge& he : h.edges())
                        ids.push_back(*c.g.edge_id(occ[static_cast<std::size_t>(he.u)],
                                                   occ[static_cast<std::size_t>(he.v)]));
                    for (std::size_t i = 0; i < ids.size(); ++i)
                        for (std::size_t j = i + 1; j < ids.size(); ++j)
                            diamond_pairs.emplace_back(std::min(ids[i], ids[j]),
                                                       std::max(ids[i], ids[j]));
                }
                auto in_diamond = [&](EdgeId e, EdgeId f) {
                    for (auto [a, b] : diamond_pairs)
                        if (a == e && b == f) return true;
                    return false;
                };
                for (EdgeId e = 0; e < c.m; ++e)
                    for (EdgeId f = e + 1; f < c.m; ++f) {
                        if (detail::in_common_triangle(c.g, e, f) || in_diamond(e, f)) continue;
                        if (c.thetabar_classes.class_of[static_cast<std::size_t>(e)] !=
                            c.thetabar_classes.class_of[static_cast<std::size_t>(f)])
                            return pair_detail(c, e, f, "in different classes");
                    }
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "delta-size-characterizations",
            "the four delta-size statements: no 3-set iff complete; all 1-sets iff single edge; all "
            "2-sets iff K2/K3 iff closed one-class relation; all 3-sets iff no 2-set iff closed "
            "edge-count-class relation iff tree",
            connected_with_edges,
            [](const GraphContext& c) -> std::optional<std::string> {
                bool no3 = true, all1 = true, all2 = true, all3 = true, no2 = true;
                for (EdgeId e = 0; e < c.m; ++e)
                    for (EdgeId f = e + 1; f < c.m; ++f) {
                        int s = delta_set(c.g, c.dist, e, f).size();
                        if (s == 3) no3 = false;
                        if (s != 1) all1 = false;
                        if (s != 2) all2 = false;
                        if (s != 3) all3 = false;
                        if (s == 2) no2 = false;
                    }
                bool complete_g = c.m == static_cast<long long>(c.n) * (c.n - 1) / 2;
                if (no3 != complete_g) return "statement 1 fails";
                bool k2 = c.n == 2 && c.m == 1;
                if (all1 != k2) return "statement 2 fails";
                bool k2_or_k3 = k2 || (c.n == 3 && c.m == 3);
                Triviality t = triviality(c.theta, c.theta_classes);
                bool closed_one = is_closed(c.theta) && t.one_trivial();
                if (all2 != k2_or_k3 || all2 != closed_one) return "statement 3 fails";
                bool closed_all = is_closed(c.theta) && t.edge_trivial();
                bool tree = is_tree(c.g);
                if (all3 != no2 || all3 != closed_all || all3 != tree) return "statement 4 fails";
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "nonadjacent-delta3-iff-diameter",
            "diameter at most two iff no non-adjacent pair has a 3-element delta iff all "
            "non-adjacent deltas sit inside {1,2}",
            connected,
            [](const GraphContext& c) -> std::optional<std::string> {
                bool no3 = true, in12 = true;
                for_each_nonadjacent_pair(c.g, [&](EdgeId e, EdgeId f) {
                    DeltaSet d = delta_set(c.g, c.dist, e, f);
                    if (d.size() == 3) no3 = false;
                    for (ExtNat x : d)
                        if (x != ExtNat(1) && x != ExtNat(2)) in12 = false;
                });
                bool diam2 = true;
                for (Vertex u = 0; u < c.n && diam2; ++u)
                    for (Vertex v = u + 1; v < c.n; ++v)
                        if (c.dist(u, v) > ExtNat(2)) {
                            diam2 = false;
                            break;
                        }
                if (no3 != diam2 || in12 != diam2) return "equivalence fails";
                if (diameter_le_2_via_delta(c.g) != diam2) return "delta route disagrees";
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "block-graph-iff-nonadjacent-complement",
            "block graphs are exactly the graphs whose non-adjacent edge pairs are all in the "
            "complement relation; the four-point and isometric-subgraph routes agree",
            connected,
            [](const GraphContext& c) -> std::optional<std::string> {
                bool structural = is_block_graph(c.g);
                bool via_rel = block_graph_via_theta_bar(c.g);
                bool four_point = block_graph_four_point(c.g);
                bool iso_route = block_graph_no_isometric_cycle_or_diamond(c.g);
                if (structural != via_rel || structural != four_point || structural != iso_route)
                    return std::string("routes disagree: structural=") + (structural ? "t" : "f") +
                           " relation=" + (via_rel ? "t" : "f") +
                           " four-point=" + (four_point ? "t" : "f") +
                           " isometric=" + (iso_route ? "t" : "f");
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "all-nonadjacent-related-iff-small-free",
            "all non-adjacent pairs related iff all non-adjacent deltas are {1,2} with no paw iff "
            "2-element deltas with no paw iff diameter <= 2 and K4/2K2/paw-free",
            connected,
            [](const GraphContext& c) -> std::optional<std::string> {
                bool direct = true, delta12 = true, delta2 = true;
                for_each_nonadjacent_pair(c.g, [&](EdgeId e, EdgeId f) {
                    if (!theta_related(c.g, c.dist, e, f)) direct = false;
                    DeltaSet d = delta_set(c.g, c.dist, e, f);
                    if (d.size() != 2) delta2 = false;
                    if (!(d == DeltaSet::from({ExtNat(1), ExtNat(2)}))) delta12 = false;
                });
                bool paw_free = !contains_induced(c.g, "paw").has_value();
                bool s2 = delta2 && paw_free;
                bool s3 = delta12 && paw_free;
                bool s4 = diameter_le_2_via_delta(c.g) && paw_free &&
                          !contains_induced(c.g, "K4").has_value() &&
                          !contains_induced(c.g, "2K2").has_value();
                if (direct != s2 || direct != s3 || direct != s4) return "equivalence fails";
                if (all_nonadjacent_theta(c.g) != direct) return "operation disagrees";
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "tree-iff-nonadjacent-delta3",
            "for connected graphs with a non-adjacent edge pair: complement closed and one-class "
            "iff every non-adjacent delta has three elements iff tree",
            [](const GraphContext& c) {
                if (!c.connected) return false;
                bool has = false;
                for_each_nonadjacent_pair(c.g, [&](EdgeId, EdgeId) { has = true; });
                return has;
            },
            [](const GraphContext& c) -> std::optional<std::string> {
                bool all3 = true;
                for_each_nonadjacent_pair(c.g, [&](EdgeId e, EdgeId f) {
                    if (delta_set(c.g, c.dist, e, f).size() != 3) all3 = false;
                });
                bool closed_one = is_closed(c.thetabar) && c.thetabar_classes.count == 1;
                bool tree = is_tree(c.g);
                if (all3 != tree || closed_one != tree) return "equivalence fails";
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "triangle-free-single-class",
            "triangle-free graphs have a one-class complement closure",
            with_edges,
            [](const GraphContext& c) -> std::optional<std::string> {
                if (!contains_induced(c.g, "K3") && c.thetabar_classes.count != 1)
                    return std::to_string(c.thetabar_classes.count) + " classes";
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "single-class-characterization",
            "the distance-free small-subgraph test for a one-class complement closure matches the "
            "distance-based class count",
            connected_with_edges,
            [](const GraphContext& c) -> std::optional<std::string> {
                bool predicted = theta_bar_star_is_1trivial(c.g);
                bool actual = c.thetabar_classes.count == 1;
                if (predicted != actual)
                    return std::string("predicted=") + (predicted ? "one" : "several") +
                           " actual=" + std::to_string(c.thetabar_classes.count);
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "several-classes-iff-multipartite-3-4",
            "the complement closure has several classes exactly for complete multipartite graphs "
            "with 3 or 4 parts; then non-adjacent deltas sit inside {1,2}",
            connected,
            [](const GraphContext& c) -> std::optional<std::string> {
                auto parts = is_complete_multipartite(c.g);
                bool mp34 = parts && (parts->size() == 3 || parts->size() == 4);
                bool several = c.thetabar_classes.count > 1;
                if (several != mp34)
                    return std::string("several=") + (several ? "true" : "false") +
                           " multipartite-3-4=" + (mp34 ? "true" : "false");
                if (several) {
                    bool ok = true;
                    for_each_nonadjacent_pair(c.g, [&](EdgeId e, EdgeId f) {
                        DeltaSet d = delta_set(c.g, c.dist, e, f);
                        for (ExtNat x : d)
                            if (x != ExtNat(1) && x != ExtNat(2)) ok = false;
                    });
                    if (!ok) return "non-adjacent delta outside {1,2}";
                }
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "class-count-one-or-three",
            "the complement closure of any graph with edges has exactly one or three classes",
            with_edges,
            [](const GraphContext& c) -> std::optional<std::string> {
                if (c.thetabar_classes.count != 1 && c.thetabar_classes.count != 3)
                    return std::to_string(c.thetabar_classes.count) + " classes";
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "distance-free-classes-match",
            "the distance-free class computation equals the distance-based partition",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                EdgePartition fast = theta_bar_classes_distance_free(c.g);
                if (!(fast == c.thetabar_classes)) return "partitions differ";
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "small-subgraph-forces-class",
            "edges of an induced paw/C4/gem/K5/star/X-house share a complement-closure class; "
            "edges of an induced diamond/complete/K2,3 share a relation-closure class",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                auto edges_one_class = [&](const std::vector<Vertex>& occ, const EdgePartition& p)
                    -> bool {
                    int cls = -1;
                    Graph h = induced_subgraph(c.g, occ);
                    for (const Edge& he : h.edges()) {
                        EdgeId e = *c.g.edge_id(occ[static_cast<std::size_t>(he.u)],
                                                occ[static_cast<std::size_t>(he.v)]);
                        int ec = p.class_of[static_cast<std::size_t>(e)];
                        if (cls == -1) cls = ec;
                        else if (cls != ec) return false;
                    }
                    return true;
                };
                std::vector<Graph> complement_side{pattern_graph("paw"), pattern_graph("C4"),
                                                   pattern_graph("gem"), pattern_graph("K5"),
                                                   pattern_graph("X-house")};
                for (int leaves = 2; leaves <= 6 && leaves + 1 <= c.n; ++leaves)
                    complement_side.push_back(star(leaves));
                for (const Graph& pat : complement_side)
                    for (const auto& occ : induced_occurrences(c.g, pat))
                        if (!edges_one_class(occ, c.thetabar_classes))
                            return "complement-side occurrence " + vertices_to_string(occ);
                std::vector<Graph> relation_side{pattern_graph("diamond"), pattern_graph("K2,3")};
                for (int k = 3; k <= c.n && k <= 7; ++k) relation_side.push_back(complete(k));
                for (const Graph& pat : relation_side)
                    for (const auto& occ : induced_occurrences(c.g, pat))
                        if (!edges_one_class(occ, c.theta_classes))
                            return "relation-side occurrence " + vertices_to_string(occ);
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "coinciding-closures-are-one-class",
            "when the two closures induce the same partition, both are one-class",
            with_edges,
            [](const GraphContext& c) -> std::optional<std::string> {
                if (c.theta_classes == c.thetabar_classes &&
                    (c.theta_classes.count != 1 || c.thetabar_classes.count != 1))
                    return "coinciding closures with " + std::to_string(c.theta_classes.count) +
                           " classes";
                return std::nullopt;
            }});

        cs.push_back(Claim{
            "graph6-roundtrip",
            "emit then parse is the identity, byte for byte and structurally",
            always,
            [](const GraphContext& c) -> std::optional<std::string> {
                Graph back = parse_graph6(c.g6);
                if (!(back == c.g)) return "structural mismatch";
                if (emit_graph6(back) != c.g6) return "byte mismatch";
                return std::nullopt;
            }});

        return cs;
    }();
    return claims;
}

inline const Claim& claim_by_id(const std::string& id) {
    for (const Claim& c : builtin_claims())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown claim id: " + id);
}

// Runs the claims over the corpus, fanning graphs out across workers; results
// are merged in corpus order so output is deterministic.
inline PropertyReport run_claims(const std::vector<Claim>& claims, const std::vector<Graph>& corpus,
                                 int workers = 1) {
    struct Slot {
        signed char status = 0;  // 0 skipped, 1 pass, 2 fail
        std::string detail;
    };
    std::vector<std::vector<Slot>> slots(corpus.size(), std::vector<Slot>(claims.size()));
    std::vector<std::string> g6s(corpus.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1)) {
            GraphContext ctx(corpus[i]);
            g6s[i] = ctx.g6;
            for (std::size_t j = 0; j < claims.size(); ++j) {
                if (!claims[j].applies(ctx)) continue;
                auto fail = claims[j].check(ctx);
                slots[i][j].status = fail ? 2 : 1;
                if (fail) slots[i][j].detail = *fail;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    PropertyReport report;
    report.corpus_size = static_cast<long>(corpus.size());
    for (std::size_t j = 0; j < claims.size(); ++j) {
        ClaimResult res;
        res.id = claims[j].id;
        res.description = claims[j].description;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (slots[i][j].status == 0) continue;
            ++res.checked;
            if (slots[i][j].status == 2)
                res.failures.push_back(Counterexample{g6s[i], slots[i][j].detail});
        }
        report.claims.push_back(std::move(res));
    }
    return report;
}

inline PropertyReport run_property_suite(const CorpusSpec& spec, int workers = 1) {
    return run_claims(builtin_claims(), enumerate_to_vector(spec), workers);
}

inline void print_report(const PropertyReport& report, std::ostream& os,
                         std::size_t max_failures = 5) {
    for (const auto& c : report.claims) {
        os << (c.passed() ? "[PASS] " : "[FAIL] ") << c.id << "  checked=" << c.checked;
        if (!c.passed()) os << " counterexamples=" << c.failures.size();
        os << "\n";
        std::size_t shown = 0;
        for (const auto& f : c.failures) {
            if (shown++ == max_failures) {
                os << "    ...\n";
                break;
            }
            os << "    counterexample " << f.graph6 << "  " << f.detail << "\n";
        }
    }
    os << (report.all_passed() ? "all claims passed" : "CLAIM FAILURES PRESENT") << " ("
       << report.corpus_size << " corpus graphs)\n";
}

}  // namespace dw
