#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "walkdom/graph.hpp"

namespace walkdom {

/// Decodes one short-form graph6 line (n <= 62). A leading ">>graph6<<"
/// header is tolerated and skipped. Bit order is the standard upper
/// triangle, column-wise: (0,1),(0,2),(1,2),(0,3),...; 6-bit groups offset
/// by 63, padding bits must be zero.
Graph decode_graph6(std::string_view line);

/// Short-form graph6 encoding; encode∘decode is the identity on canonical
/// short-form strings and decode∘encode the identity on graphs.
std::string encode_graph6(const Graph& g);

/// Reads a .g6 file: one graph per line, blank lines and an optional
/// ">>graph6<<" header skipped.
std::vector<Graph> read_graph6_file(const std::string& path);
std::vector<Graph> parse_graph6_lines(const std::string& text);

}  // namespace walkdom
