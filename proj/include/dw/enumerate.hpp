#pragma once

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "dw/graph.hpp"
#include "dw/graph6.hpp"
#include "dw/isomorphism.hpp"

namespace dw {

struct CorpusSpec {
    int max_n = 6;
    bool connected_only = false;
    std::optional<std::string> graph6_file;  // overrides the built-in enumerator
};

namespace detail {

// One representative per isomorphism class, for every vertex count 1..n_max.
// Level k is produced by attaching a new vertex to every level-(k-1) graph in
// all 2^(k-1) ways and deduplicating by canonical form. Every k-vertex graph
// restricted to its first k-1 vertices is a (k-1)-vertex graph, so the sweep
// is complete.
inline std::vector<Graph> builtin_corpus(int n_max) {
    if (n_max < 1) throw std::invalid_argument("enumerate_graphs: max_n must be >= 1");
    if (n_max > 8)
        throw std::invalid_argument("enumerate_graphs: built-in enumeration supports max_n <= 8; "
                                    "use a graph6 file for larger corpora");
    std::vector<Graph> out{Graph(1)};
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n_max; ++k) {
        std::vector<Graph> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph& base : level) {
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (const Edge& e : base.edges()) edges.emplace_back(e.u, e.v);
            std::size_t base_edges = edges.size();
            for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
                edges.resize(base_edges);
                for (int v = 0; v < k - 1; ++v)
                    if (mask >> v & 1) edges.emplace_back(v, k - 1);
                Graph candidate = Graph::from_edges(k, edges);
                if (seen.insert(canonical_key(candidate)).second) next.push_back(candidate);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

}  // namespace detail

inline void enumerate_graphs(const CorpusSpec& spec, const std::function<void(const Graph&)>& fn) {
    std::vector<Graph> graphs;
    if (spec.graph6_file) {
        std::ifstream in(*spec.graph6_file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open corpus file: " + *spec.graph6_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        graphs = read_graph6_lines(buf.str());
        for (const Graph& g : graphs) {
            if (spec.max_n > 0 && g.vertex_count() > spec.max_n) continue;
            if (spec.connected_only && !is_connected(g)) continue;
            fn(g);
        }
        return;
    }
    graphs = detail::builtin_corpus(spec.max_n);
    for (const Graph& g : graphs) {
        if (spec.connected_only && !is_connected(g)) continue;
        fn(g);
    }
}

inline std::vector<Graph> enumerate_to_vector(const CorpusSpec& spec) {
    std::vector<Graph> out;
    enumerate_graphs(spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace dw
