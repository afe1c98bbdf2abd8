#include "walkdom/canonical.hpp"

#include <algorithm>
#include <optional>

#include "walkdom/graph6.hpp"

namespace walkdom {

namespace {

// One round of neighborhood refinement until the partition is stable.
// Color ids are assigned densely in sorted signature order, which makes the
// refined partition (and the order of its cells) isomorphism-invariant.
std::vector<int> refine(const Graph& g, std::vector<int> color) {
  const int n = g.vertex_count();
  int ncolors = 1 + *std::max_element(color.begin(), color.end());
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.reserve(g.degree(v) + 1);
      for (int w : g.neighbors(v)) s.push_back(color[w]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), color[v]);
      sig[v] = {std::move(s), v};
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(n);
    int id = -1;
    const std::vector<int>* prev = nullptr;
    for (auto& [s, v] : sig) {
      if (!prev || s != *prev) ++id, prev = &s;
      next[v] = id;
    }
    int count = id + 1;
    if (count == ncolors) return next;
    ncolors = count;
    color = std::move(next);
  }
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::optional<std::vector<std::uint8_t>> best;
  std::vector<int> best_perm;

  void leaf(const std::vector<int>& color) {
    std::vector<int> at(n);  // at[pos] = original vertex
    for (int v = 0; v < n; ++v) at[color[v]] = v;
    std::vector<std::uint8_t> bits;
    bits.reserve(n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(at[i], at[j]) ? 1 : 0);
    if (!best || bits < *best) {
      best = std::move(bits);
      best_perm = color;
    }
  }

  void run(std::vector<int> color) {
    color = refine(g, color);
    int cell_color = -1;
    for (int c = 0; c < n && cell_color < 0; ++c) {
      int count = 0;
      for (int v = 0; v < n; ++v) count += color[v] == c;
      if (count > 1) cell_color = c;
      if (count == 0) break;  // colors are dense; no bigger id exists
    }
    if (cell_color < 0) {
      leaf(color);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (color[v] != cell_color) continue;
      std::vector<int> split(n);
      for (int u = 0; u < n; ++u) split[u] = 2 * color[u] + (u == v ? 0 : 1);
      run(std::move(split));
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  CanonSearch search{g, g.vertex_count(), std::nullopt, {}};
  search.run(std::vector<int>(g.vertex_count(), 0));
  return search.best_perm;
}

std::string canonical_form(const Graph& g) {
  std::vector<int> perm = canonical_labeling(g);
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : g.edges()) edges.emplace_back(perm[i], perm[j]);
  return encode_graph6(Graph::from_edge_list(g.vertex_count(), edges));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace walkdom
