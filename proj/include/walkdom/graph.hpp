#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "walkdom/error.hpp"

namespace walkdom {

/// Vertex subset as a bitmask, bit i = vertex i. Graphs are capped at 62
/// vertices (graph6 short form), so one word always suffices.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
inline constexpr bool set_contains(VertexSet s, int v) { return (s >> v) & 1; }

/// Order on vertex sets: lexicographic on the ascending vertex lists,
/// e.g. {0,5} < {1,2} < {1,2,4} < {1,4}, with prefixes first. The lists
/// agree below the smallest element m of the symmetric difference; the set
/// without m wins only if it has nothing above m (it is a proper prefix).
inline bool set_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  VertexSet d = a ^ b;
  VertexSet lsb = d & (~d + 1);
  VertexSet above = ~(lsb | (lsb - 1));
  if (a & lsb) return (b & above) != 0;
  return (a & above) == 0;
}

std::vector<int> set_to_vertices(VertexSet s);

/// Immutable simple undirected graph over dense 0-based vertex indices.
/// Adjacency is symmetric and irreflexive by construction; every derived
/// graph (complement, induced subgraph) is a fresh value, so instances are
/// safe to share across threads. Connectivity is deliberately NOT an
/// invariant; operations that need it check it themselves.
class Graph {
 public:
  static constexpr int kMaxVertices = 62;
  static constexpr int kUnreachable = -1;

  /// Builds a graph from an edge list. Duplicate edges collapse and
  /// orientation is ignored; self-loops and out-of-range indices are errors.
  /// Labels default to "x0".."x{n-1}".
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                              std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool adjacent(int i, int j) const { return set_contains(adj_[i], j); }
  VertexSet neighbor_set(int v) const { return adj_[v]; }
  const std::vector<int>& neighbors(int v) const { return nbr_[v]; }
  int degree(int v) const;
  VertexSet all_vertices() const { return (n_ == 64) ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }
  std::vector<std::pair<int, int>> edges() const;

  /// Shortest-path distance in edges; kUnreachable across components.
  int distance(int u, int v) const;

  bool connected() const;
  /// Vertex sets of the connected components, ordered by least vertex.
  std::vector<VertexSet> components() const;

  Graph complement() const;

  /// Subgraph induced on `keep`, plus the old->new index map (-1 = dropped).
  /// Kept vertices retain their labels.
  std::pair<Graph, std::vector<int>> induced_subgraph(VertexSet keep) const;

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of the vertex with the given label, or -1.
  int vertex_by_label(const std::string& name) const;

  /// Structural equality (labels are cosmetic and ignored).
  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

  std::string to_dot(const std::string& name = "G") const;

 private:
  Graph(int n, std::vector<VertexSet> adj, std::vector<std::string> labels);
  void compute_distances();

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::vector<int>> nbr_;  // sorted adjacency lists
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint8_t>> dist_;  // 0xff = unreachable
};

/// Formats a vertex sequence or set as comma-separated labels, e.g. "x0,x4,x3".
std::string format_vertices(const Graph& g, const std::vector<int>& vs);

/// Plain edge-list text: "n m" header line, then one "i j" line per edge.
Graph parse_edge_list_text(const std::string& text);
std::string to_edge_list_text(const Graph& g);

}  // namespace walkdom
