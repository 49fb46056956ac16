#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "dw/distance.hpp"
#include "dw/extnat.hpp"
#include "dw/graph.hpp"

namespace dw {

// The set {d(a,x), d(b,y), d(a,y), d(b,x)} of endpoint distances between two
// edges. At most 4 values before dedup, at most 3 distinct within a
// component.
class DeltaSet {
public:
    DeltaSet(ExtNat a, ExtNat b, ExtNat c, ExtNat d) : vals_{a, b, c, d}, size_(4) { normalize(); }

    static DeltaSet from(std::initializer_list<ExtNat> vals) {
        DeltaSet d(ExtNat(0), ExtNat(0), ExtNat(0), ExtNat(0));
        d.size_ = 0;
        for (ExtNat v : vals) {
            if (d.size_ == 4) throw std::invalid_argument("DeltaSet: more than 4 values");
            d.vals_[static_cast<std::size_t>(d.size_++)] = v;
        }
        if (d.size_ == 0) throw std::invalid_argument("DeltaSet: empty");
        d.normalize();
        return d;
    }

    int size() const { return size_; }
    ExtNat min() const { return vals_[0]; }
    ExtNat max() const { return vals_[static_cast<std::size_t>(size_ - 1)]; }

    bool contains(ExtNat x) const {
        for (int i = 0; i < size_; ++i)
            if (vals_[static_cast<std::size_t>(i)] == x) return true;
        return false;
    }

    // Exactly {k, k+1} for some finite k.
    bool is_consecutive_pair() const {
        return size_ == 2 && max().is_finite() && min().value() + 1 == max().value();
    }

    const ExtNat* begin() const { return vals_.data(); }
    const ExtNat* end() const { return vals_.data() + size_; }

    friend bool operator==(const DeltaSet& a, const DeltaSet& b) {
        if (a.size_ != b.size_) return false;
        for (int i = 0; i < a.size_; ++i)
            if (a.vals_[static_cast<std::size_t>(i)] != b.vals_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

private:
    void normalize() {
        std::sort(vals_.begin(), vals_.begin() + size_);
        int out = 1;
        for (int i = 1; i < size_; ++i)
            if (vals_[static_cast<std::size_t>(i)] != vals_[static_cast<std::size_t>(out - 1)])
                vals_[static_cast<std::size_t>(out++)] = vals_[static_cast<std::size_t>(i)];
        size_ = out;
    }

    std::array<ExtNat, 4> vals_;
    int size_;
};

inline void check_edge_id(const Graph& g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw std::out_of_range("EdgeId out of range");
}

inline DeltaSet delta_set(const Graph& g, const DistanceMatrix& d, EdgeId e, EdgeId f) {
    check_edge_id(g, e);
    check_edge_id(g, f);
    const Edge& ea = g.edge(e);
    const Edge& fb = g.edge(f);
    return DeltaSet(d(ea.u, fb.u), d(ea.v, fb.v), d(ea.u, fb.v), d(ea.v, fb.u));
}

// The defining inequality for edges {a,b} and {x,y}:
//   d(a,x) + d(b,y) != d(a,y) + d(b,x).
// Swapping either edge's endpoint labels swaps both sides, so the verdict
// does not depend on the labeling. Sums saturate at infinity, hence edges in
// different components always compare equal.
inline bool theta_from_distances(ExtNat dax, ExtNat dby, ExtNat day, ExtNat dbx) {
    return dax + dby != day + dbx;
}

// Reflexive by convention: every edge relates to itself.
inline bool theta_related(const Graph& g, const DistanceMatrix& d, EdgeId e, EdgeId f) {
    check_edge_id(g, e);
    check_edge_id(g, f);
    if (e == f) return true;
    const Edge& ea = g.edge(e);
    const Edge& fb = g.edge(f);
    return theta_from_distances(d(ea.u, fb.u), d(ea.v, fb.v), d(ea.u, fb.v), d(ea.v, fb.u));
}

// Reflexive complement: e = f, or distinct edges whose distance sums agree
// (which covers all distinct edges in different components).
inline bool theta_bar_related(const Graph& g, const DistanceMatrix& d, EdgeId e, EdgeId f) {
    check_edge_id(g, e);
    check_edge_id(g, f);
    return e == f || !theta_related(g, d, e, f);
}

enum class RelationKind { Theta, ThetaBar };

// A symmetric reflexive relation on edge ids, stored as its graph
// representation: vertex i stands for host edge i, and distinct related edges
// are adjacent. Reflexive pairs are implicit.
struct EdgeRelation {
    Graph graph;

    bool related(EdgeId e, EdgeId f) const { return e == f || graph.adjacent(e, f); }
};

inline EdgeRelation relation_graph(const Graph& g, const DistanceMatrix& d, RelationKind which) {
    int m = g.edge_count();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (EdgeId e = 0; e < m; ++e) {
        for (EdgeId f = e + 1; f < m; ++f) {
            bool rel = which == RelationKind::Theta ? theta_related(g, d, e, f)
                                                    : theta_bar_related(g, d, e, f);
            if (rel) pairs.emplace_back(e, f);
        }
    }
    return EdgeRelation{Graph::from_edges(m, pairs)};
}

inline EdgeRelation relation_graph(const Graph& g, RelationKind which) {
    return relation_graph(g, bfs_all_pairs(g), which);
}

// Partition of edge ids into the equivalence classes of the transitive
// closure; class ids are dense and ordered by first occurrence.
struct EdgePartition {
    std::vector<int> class_of;
    int count = 0;

    std::vector<int> class_sizes() const {
        std::vector<int> sizes(static_cast<std::size_t>(count), 0);
        for (int c : class_of) ++sizes[static_cast<std::size_t>(c)];
        return sizes;
    }

    friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

inline EdgePartition closure_classes(const EdgeRelation& r) {
    VertexPartition comps = connected_components(r.graph);
    return EdgePartition{std::move(comps.comp_of), comps.count};
}

// A relation equals its own transitive closure exactly when every component
// of its graph representation is a clique.
inline bool is_closed(const EdgeRelation& r) {
    EdgePartition p = closure_classes(r);
    std::vector<int> sizes = p.class_sizes();
    std::vector<long long> inner(static_cast<std::size_t>(p.count), 0);
    for (const Edge& e : r.graph.edges())
        ++inner[static_cast<std::size_t>(p.class_of[static_cast<std::size_t>(e.u)])];
    for (int c = 0; c < p.count; ++c) {
        long long k = sizes[static_cast<std::size_t>(c)];
        if (inner[static_cast<std::size_t>(c)] != k * (k - 1) / 2) return false;
    }
    return true;
}

// Class-count classification of a closure. A single-edge relation is both
// 1-trivial and |E|-trivial.
struct Triviality {
    int class_count = 0;
    int edge_count = 0;

    bool one_trivial() const { return class_count == 1; }
    bool edge_trivial() const { return edge_count >= 1 && class_count == edge_count; }
};

inline Triviality triviality(const EdgeRelation& r, const EdgePartition& p) {
    return Triviality{p.count, r.graph.vertex_count()};
}

// Whether the closures of the relation and of its reflexive complement induce
// the same edge partition. Which graphs achieve this is open; both closures
// being one-class is a necessary condition (and is all this library asserts).
inline bool closures_coincide(const Graph& g) {
    DistanceMatrix d = bfs_all_pairs(g);
    return closure_classes(relation_graph(g, d, RelationKind::Theta)) ==
           closure_classes(relation_graph(g, d, RelationKind::ThetaBar));
}

}  // namespace dw
