#include "walkdom/patterns.hpp"

#include <algorithm>
#include <sstream>

namespace walkdom {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

std::vector<PatternEntry> build_catalog() {
  std::vector<PatternEntry> out;
  auto add = [&](const std::string& name, int n, const EdgeList& edges) {
    out.push_back({name, Graph::from_edge_list(n, edges)});
  };
  // Edge lists transcribed from the standard drawings of these graphs.
  add("P4", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  add("co-gemK2", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}, {2, 4}, {4, 5}});
  add("C5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  add("D", 6, {{0, 1}, {0, 5}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {4, 5}});
  add("F3", 6, {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {4, 5}});
  add("A", 6, {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {4, 5}});
  add("X96", 6, {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
  add("house", 5, {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}});
  add("X5", 6, {{0, 1}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}});
  add("co-X58", 6, {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {4, 5}});
  add("Antenna", 6, {{0, 1}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}});
  add("F", 7, {{0, 1}, {0, 6}, {1, 2}, {5, 6}, {2, 6}, {2, 3}, {2, 5}, {3, 4}, {4, 5}});
  return out;
}

}  // namespace

const std::vector<PatternEntry>& catalog() {
  static const std::vector<PatternEntry> entries = build_catalog();
  return entries;
}

const PatternEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  raise(Errc::UnknownPatternName, "unknown pattern \"" + name + "\"");
}

namespace {

bool extend_embedding(const Graph& host, const Graph& pattern, std::vector<int>& map,
                      VertexSet& used, int next) {
  if (next == pattern.vertex_count()) return true;
  for (int w = 0; w < host.vertex_count(); ++w) {
    if (set_contains(used, w)) continue;
    if (host.degree(w) < pattern.degree(next)) continue;
    bool ok = true;
    for (int q = 0; q < next; ++q) {
      if (pattern.adjacent(next, q) != host.adjacent(w, map[q])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[next] = w;
    used |= vbit(w);
    if (extend_embedding(host, pattern, map, used, next + 1)) return true;
    used &= ~vbit(w);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  std::vector<int> map(pattern.vertex_count(), -1);
  VertexSet used = 0;
  if (extend_embedding(host, pattern, map, used, 0)) return map;
  return std::nullopt;
}

namespace {

// Grows induced paths anchored at the least cycle vertex; a new vertex may
// be adjacent only to the path tip, except when it also closes back to the
// anchor, which yields a chordless cycle.
struct HoleSearch {
  const Graph& g;
  std::vector<int> path;
  VertexSet on_path = 0;

  std::optional<std::vector<int>> grow() {
    int anchor = path.front();
    int cur = path.back();
    for (int y : g.neighbors(cur)) {
      if (y <= anchor || set_contains(on_path, y)) continue;
      VertexSet back = g.neighbor_set(y) & on_path;
      if (back == (vbit(cur) | vbit(anchor))) {
        if (path.size() + 1 >= 5 && path[1] < y) {
          auto cycle = path;
          cycle.push_back(y);
          return cycle;
        }
        continue;  // closing through y keeps the chord to the anchor
      }
      if (back != vbit(cur)) continue;
      path.push_back(y);
      on_path |= vbit(y);
      if (auto found = grow()) return found;
      path.pop_back();
      on_path &= ~vbit(y);
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<int>> has_hole(const Graph& g) {
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (int first : g.neighbors(a)) {
      if (first <= a) continue;
      HoleSearch search{g, {a, first}, vbit(a) | vbit(first)};
      if (auto found = search.grow()) return found;
    }
  }
  return std::nullopt;
}

ForbiddenSet parse_forbidden(const std::string& spec) {
  ForbiddenSet fs;
  auto push = [&](const std::string& name) {
    for (const auto& item : fs.items)
      if (item.name == name) return;
    if (name == "hole") {
      fs.items.push_back({"hole", true, std::nullopt});
    } else {
      fs.items.push_back({name, false, catalog_entry(name).graph});
    }
  };
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (token.empty()) continue;
    if (token == "HHD") {
      push("house");
      push("hole");
      push("D");
    } else {
      push(token);
    }
  }
  if (fs.items.empty()) raise(Errc::ParseError, "empty forbidden set");
  return fs;
}

std::string to_string(const ForbiddenSet& fs) {
  std::string out;
  for (const auto& item : fs.items) {
    if (!out.empty()) out += ',';
    out += item.name;
  }
  return out;
}

FreeResult is_free(const Graph& g, const ForbiddenSet& fs) {
  for (const auto& item : fs.items) {
    if (item.hole_family) {
      if (auto cycle = has_hole(g)) return {false, "hole", *cycle};
    } else if (auto embedding = contains_induced(g, *item.pattern)) {
      return {false, item.name, *embedding};
    }
  }
  return {};
}

}  // namespace walkdom
