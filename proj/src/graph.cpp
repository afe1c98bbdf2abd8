#include "walkdom/graph.hpp"

#include <bit>
#include <deque>
#include <sstream>

namespace walkdom {

std::vector<int> set_to_vertices(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

Graph::Graph(int n, std::vector<VertexSet> adj, std::vector<std::string> labels)
    : n_(n), adj_(std::move(adj)), labels_(std::move(labels)) {
  nbr_.resize(n_);
  for (int v = 0; v < n_; ++v) nbr_[v] = set_to_vertices(adj_[v]);
  compute_distances();
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels) {
  if (n < 1) raise(Errc::UnsupportedSize, "graph needs at least one vertex");
  if (n > kMaxVertices)
    raise(Errc::UnsupportedSize, "graph has " + std::to_string(n) + " vertices, limit is " +
                                     std::to_string(kMaxVertices));
  std::vector<VertexSet> adj(n, 0);
  for (auto [i, j] : edges) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      raise(Errc::IndexOutOfRange,
            "edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for n=" +
                std::to_string(n));
    if (i == j) raise(Errc::SelfLoop, "self-loop at vertex " + std::to_string(i));
    adj[i] |= vbit(j);
    adj[j] |= vbit(i);
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (int v = 0; v < n; ++v) labels.push_back("x" + std::to_string(v));
  } else if (static_cast<int>(labels.size()) != n) {
    raise(Errc::IndexOutOfRange, "label count does not match vertex count");
  }
  return Graph(n, std::move(adj), std::move(labels));
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j : nbr_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

void Graph::compute_distances() {
  dist_.assign(n_, std::vector<std::uint8_t>(n_, 0xff));
  std::deque<int> queue;
  for (int s = 0; s < n_; ++s) {
    auto& d = dist_[s];
    d[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : nbr_[x]) {
        if (d[y] == 0xff) {
          d[y] = static_cast<std::uint8_t>(d[x] + 1);
          queue.push_back(y);
        }
      }
    }
  }
}

int Graph::distance(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) raise(Errc::IndexOutOfRange, "vertex out of range");
  std::uint8_t d = dist_[u][v];
  return d == 0xff ? kUnreachable : d;
}

bool Graph::connected() const {
  for (int v = 1; v < n_; ++v)
    if (dist_[0][v] == 0xff) return false;
  return true;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet seen = 0;
  for (int v = 0; v < n_; ++v) {
    if (set_contains(seen, v)) continue;
    VertexSet comp = 0;
    for (int w = 0; w < n_; ++w)
      if (dist_[v][w] != 0xff) comp |= vbit(w);
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

Graph Graph::complement() const {
  std::vector<VertexSet> adj(n_);
  VertexSet all = all_vertices();
  for (int v = 0; v < n_; ++v) adj[v] = all & ~adj_[v] & ~vbit(v);
  return Graph(n_, std::move(adj), labels_);
}

std::pair<Graph, std::vector<int>> Graph::induced_subgraph(VertexSet keep) const {
  keep &= all_vertices();
  if (keep == 0) raise(Errc::EmptySelection, "induced subgraph needs at least one vertex");
  std::vector<int> old_to_new(n_, -1);
  std::vector<int> kept = set_to_vertices(keep);
  for (int i = 0; i < static_cast<int>(kept.size()); ++i) old_to_new[kept[i]] = i;
  int m = static_cast<int>(kept.size());
  std::vector<VertexSet> adj(m, 0);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = labels_[kept[i]];
    for (int w : nbr_[kept[i]])
      if (old_to_new[w] >= 0) adj[i] |= vbit(old_to_new[w]);
  }
  return {Graph(m, std::move(adj), std::move(labels)), std::move(old_to_new)};
}

int Graph::vertex_by_label(const std::string& name) const {
  for (int v = 0; v < n_; ++v)
    if (labels_[v] == name) return v;
  return -1;
}

std::string Graph::to_dot(const std::string& name) const {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < n_; ++v) out << "  \"" << labels_[v] << "\";\n";
  for (auto [i, j] : edges()) out << "  \"" << labels_[i] << "\" -- \"" << labels_[j] << "\";\n";
  out << "}\n";
  return out.str();
}

std::string format_vertices(const Graph& g, const std::vector<int>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += g.label(vs[i]);
  }
  return out;
}

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) raise(Errc::ParseError, "edge list needs an \"n m\" header");
  if (n < 1 || n > Graph::kMaxVertices) raise(Errc::UnsupportedSize, "bad vertex count in edge list");
  std::vector<std::pair<int, int>> edges;
  for (long long k = 0; k < m; ++k) {
    int i = 0, j = 0;
    if (!(in >> i >> j)) raise(Errc::ParseError, "edge list ended early");
    edges.emplace_back(i, j);
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.vertex_count() << ' ' << es.size() << '\n';
  for (auto [i, j] : es) out << i << ' ' << j << '\n';
  return out.str();
}

}  // namespace walkdom
