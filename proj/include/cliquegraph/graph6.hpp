// graph6 encoding/decoding.
//
// Format recap: a size header followed by the upper triangle of the
// adjacency matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
// packed big-endian six bits per printable byte (value + 63). Sizes
// n <= 62 use one header byte; 63 <= n <= 258047 use '~' plus three
// bytes; larger sizes use '~~' plus six bytes. Padding bits must be zero.
// Decoding rejects anything malformed with the byte offset.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cliquegraph/errors.hpp"
#include "cliquegraph/graph.hpp"

namespace cliquegraph {

namespace graph6_detail {

constexpr long long kMaxMediumN = 258047;          // 2^18 - 1
constexpr long long kMaxLongN = 68719476735LL;     // 2^36 - 1

inline int decode_byte(std::string_view text, std::size_t at) {
    if (at >= text.size()) throw parse_error("truncated graph6 data", text.size());
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw parse_error("invalid graph6 byte", at);
    return c - 63;
}

}  // namespace graph6_detail

inline std::string write_graph6(const Graph& g) {
    using namespace graph6_detail;
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= kMaxMediumN) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else if (n <= kMaxLongN) {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw invalid_argument_error("graph too large for graph6");
    }
    int bits = 0, value = 0;
    auto push_bit = [&](bool b) {
        value = (value << 1) | (b ? 1 : 0);
        if (++bits == 6) {
            out.push_back(static_cast<char>(value + 63));
            bits = 0;
            value = 0;
        }
    };
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) push_bit(g.adjacent(u, v));
    if (bits) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    using namespace graph6_detail;
    // A single trailing newline (or CRLF) is tolerated; nothing else.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty graph6 input", 0);

    std::size_t at = 0;
    long long n;
    if (decode_byte(text, 0) == 63) {  // '~'
        if (text.size() > 1 && decode_byte(text, 1) == 63) {
            n = 0;
            for (at = 2; at < 8; ++at) n = (n << 6) | decode_byte(text, at);
            if (n <= kMaxMediumN) throw parse_error("over-long size header", 1);
        } else {
            n = 0;
            for (at = 1; at < 4; ++at) n = (n << 6) | decode_byte(text, at);
            if (n <= 62) throw parse_error("over-long size header", 1);
        }
    } else {
        n = decode_byte(text, 0);
        at = 1;
    }
    if (n > 100000) throw resource_limit_error("graph6 vertex count exceeds supported size");

    Graph g(static_cast<int>(n));
    const long long pairs = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() - at < need) throw parse_error("truncated graph6 data", text.size());
    if (text.size() - at > need) throw parse_error("trailing bytes after graph6 data", at + need);

    long long index = 0;
    int u = 0, v = 1;
    for (std::size_t i = 0; i < need; ++i) {
        int chunk = decode_byte(text, at + i);
        for (int bit = 5; bit >= 0; --bit, ++index) {
            bool on = (chunk >> bit) & 1;
            if (index < pairs) {
                if (on) g.add_edge(u, v);
                if (++u == v) {
                    u = 0;
                    ++v;
                }
            } else if (on) {
                throw parse_error("nonzero padding bits", at + i);
            }
        }
    }
    return g;
}

}  // namespace cliquegraph
