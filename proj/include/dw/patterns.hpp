#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dw/graph.hpp"
#include "dw/isomorphism.hpp"

namespace dw {

// Named small graphs used as forbidden / enforced induced subgraphs.
//   paw     = triangle plus a pendant vertex
//   diamond = K4 minus one edge
//   gem     = P4 plus a vertex adjacent to all of it
//   X-house = K4 plus a vertex adjacent to exactly two of its vertices
inline const std::vector<std::pair<std::string, Graph>>& named_patterns() {
    static const std::vector<std::pair<std::string, Graph>> patterns = [] {
        std::vector<std::pair<std::string, Graph>> p;
        p.emplace_back("K2", complete(2));
        p.emplace_back("K3", complete(3));
        p.emplace_back("K4", complete(4));
        p.emplace_back("K5", complete(5));
        p.emplace_back("P4", path(4));
        p.emplace_back("C4", cycle(4));
        p.emplace_back("2K2", disjoint_union(complete(2), complete(2)));
        p.emplace_back("paw", Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
        p.emplace_back("diamond", Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
        p.emplace_back("gem",
                       Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}));
        p.emplace_back("X-house", Graph::from_edges(5, {{0, 1},
                                                        {0, 2},
                                                        {0, 3},
                                                        {1, 2},
                                                        {1, 3},
                                                        {2, 3},
                                                        {0, 4},
                                                        {1, 4}}));
        p.emplace_back("K2,3", complete_multipartite({2, 3}));
        return p;
    }();
    return patterns;
}

inline const Graph& pattern_graph(const std::string& name) {
    for (const auto& [pname, pg] : named_patterns())
        if (pname == name) return pg;
    std::string known;
    for (const auto& [pname, pg] : named_patterns()) {
        if (!known.empty()) known += ", ";
        known += pname;
    }
    throw std::invalid_argument("unknown pattern '" + name + "' (known: " + known + ")");
}

// First vertex subset (in subset order) inducing the pattern, or nothing.
// Exhaustive scan over k-subsets with a degree-sequence filter; fine for the
// intended pattern sizes (<= 5 vertices).
inline std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& pattern) {
    int k = pattern.vertex_count();
    if (k > g.vertex_count()) return std::nullopt;
    std::vector<int> pdeg = degree_sequence(pattern);
    std::optional<std::vector<Vertex>> hit;
    for_each_subset(g.vertex_count(), k, [&](const std::vector<int>& subset) {
        if (hit) return;
        Graph h = induced_subgraph(g, subset);
        if (h.edge_count() != pattern.edge_count()) return;
        if (degree_sequence(h) != pdeg) return;
        if (is_isomorphic(h, pattern)) hit = subset;
    });
    return hit;
}

inline std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const std::string& name) {
    return contains_induced(g, pattern_graph(name));
}

// Every vertex subset inducing the pattern, in subset order.
inline std::vector<std::vector<Vertex>> induced_occurrences(const Graph& g, const Graph& pattern) {
    std::vector<std::vector<Vertex>> out;
    int k = pattern.vertex_count();
    if (k > g.vertex_count()) return out;
    std::vector<int> pdeg = degree_sequence(pattern);
    for_each_subset(g.vertex_count(), k, [&](const std::vector<int>& subset) {
        Graph h = induced_subgraph(g, subset);
        if (h.edge_count() != pattern.edge_count()) return;
        if (degree_sequence(h) != pdeg) return;
        if (is_isomorphic(h, pattern)) out.push_back(subset);
    });
    return out;
}

}  // namespace dw
