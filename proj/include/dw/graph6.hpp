#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dw/graph.hpp"

namespace dw {

// graph6 format: printable bytes in [63,126], a length header followed by the
// upper triangle of the adjacency matrix in column order x(0,1), x(0,2),
// x(1,2), x(0,3), ..., packed into 6-bit groups (MSB first, zero padded).

namespace detail {

inline std::size_t g6_adjacency_bytes(long long n) {
    long long bits = n * (n - 1) / 2;
    return static_cast<std::size_t>((bits + 5) / 6);
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : text) {
        unsigned char b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126) throw std::invalid_argument("graph6: byte out of range");
    }
    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw std::invalid_argument("graph6: 8-byte length form not supported");
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated length header");
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
        if (n > 258047) throw std::invalid_argument("graph6: vertex count out of range");
        pos = 4;
    }
    std::size_t want = detail::g6_adjacency_bytes(n);
    if (text.size() - pos < want) throw std::invalid_argument("graph6: truncated adjacency data");
    if (text.size() - pos > want) throw std::invalid_argument("graph6: trailing garbage");

    std::vector<std::pair<Vertex, Vertex>> es;
    long long bit = 0;
    long long total_bits = n * (n - 1) / 2;
    Vertex col = 1, row = 0;
    for (std::size_t i = 0; i < want; ++i) {
        int group = text[pos + i] - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            int b = (group >> k) & 1;
            if (bit >= total_bits) {
                if (b != 0) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (b) es.emplace_back(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), es);
}

inline std::string emit_graph6(const Graph& g) {
    long long n = g.vertex_count();
    if (n > 258047) throw std::invalid_argument("graph6: vertex count out of range");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0, filled = 0;
    for (Vertex col = 1; col < n; ++col) {
        for (Vertex row = 0; row < col; ++row) {
            group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

// Reads one graph per line; blank lines and a leading ">>graph6<<" marker are
// skipped.
inline std::vector<Graph> read_graph6_lines(const std::string& content) {
    std::vector<Graph> out;
    std::size_t start = 0;
    int lineno = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        std::string_view line(content.data() + start,
                              (end == std::string::npos ? content.size() : end) - start);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
        if (!line.empty()) {
            try {
                out.push_back(parse_graph6(line));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

}  // namespace dw
