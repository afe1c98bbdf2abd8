#include "walkdom/graph6.hpp"

#include <fstream>
#include <sstream>

namespace walkdom {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

Graph decode_graph6(std::string_view line) {
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) raise(Errc::MalformedGraph6, "empty graph6 line");
  unsigned char c0 = static_cast<unsigned char>(line[0]);
  if (c0 == 126) raise(Errc::UnsupportedSize, "long-form graph6 (n > 62) is not supported");
  if (c0 < 63 || c0 > 125) raise(Errc::MalformedGraph6, "bad graph6 size byte");
  int n = c0 - 63;
  if (n < 1) raise(Errc::MalformedGraph6, "graph6 line encodes an empty graph");
  int nbits = n * (n - 1) / 2;
  int ngroups = (nbits + 5) / 6;
  if (static_cast<int>(line.size()) != 1 + ngroups)
    raise(Errc::MalformedGraph6, "graph6 line has wrong length for n=" + std::to_string(n));

  std::vector<std::pair<int, int>> edges;
  int bit_index = 0;
  for (int g = 0; g < ngroups; ++g) {
    unsigned char c = static_cast<unsigned char>(line[1 + g]);
    if (c < 63 || c > 126) raise(Errc::MalformedGraph6, "byte out of graph6 range");
    unsigned val = c - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      bool on = (val >> b) & 1;
      if (bit_index >= nbits) {
        if (on) raise(Errc::MalformedGraph6, "nonzero padding bits");
        continue;
      }
      if (on) {
        // invert the column-wise triangle index
        int idx = bit_index, j = 1;
        while (idx >= j) idx -= j, ++j;
        edges.emplace_back(idx, j);
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > Graph::kMaxVertices) raise(Errc::UnsupportedSize, "graph too large for short-form graph6");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  unsigned group = 0;
  int bit = 5;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) group |= 1u << bit;
      if (bit-- == 0) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        bit = 5;
      }
    }
  }
  if (n >= 2 && bit != 5) out.push_back(static_cast<char>(63 + group));
  return out;
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string_view v(line);
    if (v.substr(0, kHeader.size()) == kHeader) v.remove_prefix(kHeader.size());
    while (!v.empty() && (v.back() == '\r' || v.back() == ' ')) v.remove_suffix(1);
    if (v.empty()) continue;
    out.push_back(decode_graph6(v));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph6_lines(buf.str());
}

}  // namespace walkdom
