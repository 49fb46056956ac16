#pragma once

#include <deque>
#include <stdexcept>
#include <vector>

#include "dw/extnat.hpp"
#include "dw/graph.hpp"

namespace dw {

// All-pairs shortest-path table; infinity marks cross-component pairs.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<ExtNat> flat) : n_(n), d_(std::move(flat)) {}

    int vertex_count() const { return n_; }

    ExtNat operator()(Vertex u, Vertex v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }

private:
    int n_ = 0;
    std::vector<ExtNat> d_;
};

inline DistanceMatrix bfs_all_pairs(const Graph& g) {
    int n = g.vertex_count();
    std::vector<ExtNat> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), ExtNat::infinity());
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        auto row = flat.begin() + static_cast<std::ptrdiff_t>(s) * n;
        queue.clear();
        queue.push_back(s);
        row[s] = ExtNat(0);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            ExtNat next = row[v] + ExtNat(1);
            for (Vertex w : g.neighbors(v)) {
                if (!row[w].is_finite()) {
                    row[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }
    return DistanceMatrix(n, std::move(flat));
}

inline ExtNat diameter(const Graph& g) {
    DistanceMatrix d = bfs_all_pairs(g);
    ExtNat best(0);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) best = std::max(best, d(u, v));
    return best;
}

// True iff the subgraph induced by the subset preserves host distances.
inline bool is_isometric_subgraph(const Graph& g, const std::vector<Vertex>& subset) {
    if (subset.empty()) throw std::invalid_argument("is_isometric_subgraph: empty subset");
    std::vector<Vertex> verts = subset;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    Graph h = induced_subgraph(g, verts);
    DistanceMatrix dh = bfs_all_pairs(h);
    DistanceMatrix dg = bfs_all_pairs(g);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (dh(static_cast<Vertex>(i), static_cast<Vertex>(j)) != dg(verts[i], verts[j])) return false;
    return true;
}

}  // namespace dw
