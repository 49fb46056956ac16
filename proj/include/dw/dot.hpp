#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "dw/graph.hpp"

namespace dw {

// Plain DOT text; vertex labels are the indices.
inline std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

// DOT text with one label per vertex (used for relation graphs, where vertex
// i stands for host edge i and is labelled "uv").
inline std::string to_dot_labeled(const Graph& g, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        os << "  " << v << " [label=\"" << labels[static_cast<std::size_t>(v)] << "\"];\n";
    for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string edge_label(const Edge& e) {
    return std::to_string(e.u) + std::to_string(e.v);
}

}  // namespace dw
