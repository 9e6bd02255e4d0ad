#pragma once
// graph6.hpp - graph6 text encoding plus a plain edge-list format.
//
// graph6: header N(n) is one byte 63+n for n <= 62, or '~' followed by three
// bytes holding 63 + the 6-bit groups of n (big-endian) for n <= 258047.
// The data bytes pack the upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ... six bits per byte, first bit most
// significant, zero-padded, each byte offset by 63.
//
// edge list: first line is the vertex count, each further non-blank line is
// one edge "a b". The formats are disjoint on the first byte: an edge list
// starts with a digit (ASCII < 63) and graph6 bytes are all >= 63.

#include <string>
#include <string_view>

#include "tdc/graph.hpp"

namespace tdc {

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);  // throws std::invalid_argument

std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

// Auto-detect: first non-space byte a digit -> edge list, else graph6
// (first line only).
Graph parse_graph(std::string_view text);

}  // namespace tdc
