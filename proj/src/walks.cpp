#include "walkdom/walks.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <unordered_set>

namespace walkdom {

const char* to_string(WalkClass cls) {
  switch (cls) {
    case WalkClass::SP: return "SP";
    case WalkClass::IP: return "IP";
    case WalkClass::P: return "P";
    case WalkClass::M3: return "m3";
    case WalkClass::L2: return "l2";
    case WalkClass::L3: return "l3";
    case WalkClass::TW: return "TW";
    case WalkClass::WTW: return "WTW";
    case WalkClass::W: return "W";
  }
  return "?";
}

WalkClass parse_walk_class(const std::string& token) {
  for (WalkClass cls : kAllWalkClasses)
    if (token == to_string(cls)) return cls;
  raise(Errc::ParseError,
        "unknown walk class \"" + token + "\" (expected SP, IP, P, m3, l2, l3, TW, WTW or W)");
}

VertexSet Walk::internal_set() const {
  VertexSet s = 0;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) s |= vbit(seq[i]);
  return s;
}

VertexSet Walk::vertex_set() const {
  VertexSet s = 0;
  for (int x : seq) s |= vbit(x);
  return s;
}

void validate_walk(const Graph& g, const std::vector<int>& seq) {
  if (seq.size() < 2) raise(Errc::NotAWalk, "a walk has at least two positions");
  for (int x : seq)
    if (x < 0 || x >= g.vertex_count()) raise(Errc::IndexOutOfRange, "walk vertex out of range");
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (!g.adjacent(seq[i - 1], seq[i]))
      raise(Errc::NotAWalk, "consecutive walk vertices " + g.label(seq[i - 1]) + "," +
                                g.label(seq[i]) + " are not adjacent");
  int u = seq.front(), v = seq.back();
  if (u == v || g.adjacent(u, v))
    raise(Errc::AdjacentEndpoints, "walk endpoints must be distinct and non-adjacent");
}

namespace {

void check_pair(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    raise(Errc::IndexOutOfRange, "vertex out of range");
  if (u == v || g.adjacent(u, v))
    raise(Errc::AdjacentEndpoints,
          "pair " + g.label(u) + "," + g.label(v) + " must be distinct and non-adjacent");
}

bool all_distinct(const std::vector<int>& seq) {
  VertexSet seen = 0;
  for (int x : seq) {
    if (set_contains(seen, x)) return false;
    seen |= vbit(x);
  }
  return true;
}

bool is_induced_path(const Graph& g, const std::vector<int>& seq) {
  if (!all_distinct(seq)) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    for (std::size_t j = i + 2; j < seq.size(); ++j)
      if (g.adjacent(seq[i], seq[j])) return false;
  return true;
}

}  // namespace

bool satisfies_class(const Graph& g, const std::vector<int>& seq, WalkClass cls) {
  validate_walk(g, seq);
  const int len = static_cast<int>(seq.size()) - 1;
  const int u = seq.front(), v = seq.back();
  switch (cls) {
    case WalkClass::W:
      return true;
    case WalkClass::P:
      return all_distinct(seq);
    case WalkClass::IP:
      return is_induced_path(g, seq);
    case WalkClass::SP:
      return all_distinct(seq) && len == g.distance(u, v);
    case WalkClass::M3:
      return is_induced_path(g, seq) && len >= 3;
    case WalkClass::L2:
      return is_induced_path(g, seq) && len <= 2;
    case WalkClass::L3:
      return is_induced_path(g, seq) && len <= 3;
    case WalkClass::TW:
    case WalkClass::WTW: {
      const int gu = seq[1], gv = seq[len - 1];
      for (int i = 1; i < len; ++i) {
        int x = seq[i];
        if (g.adjacent(u, x) && x != gu) return false;
        if (g.adjacent(v, x) && x != gv) return false;
      }
      if (cls == WalkClass::WTW) return true;
      for (int i = 2; i < len; ++i)
        if (seq[i] == gu) return false;
      for (int i = 1; i < len - 1; ++i)
        if (seq[i] == gv) return false;
      return true;
    }
  }
  return false;
}

WalkClassMask classify_walk(const Graph& g, const std::vector<int>& seq) {
  WalkClassMask mask = 0;
  for (WalkClass cls : kAllWalkClasses)
    if (satisfies_class(g, seq, cls)) mask |= class_bit(cls);
  return mask;
}

// ---------------------------------------------------------------------------
// Bounded sequence enumeration with an incrementally maintained class mask.

namespace {

struct WalkFrame {
  int cur;
  VertexSet visited;    // every vertex of the sequence so far
  VertexSet internals;  // vertices at positions 1..current
  bool distinct;
  bool induced_ok;   // meaningful while distinct
  bool wtw_u_ok;     // no internal vertex other than the gate is adjacent to u
  bool tw_u_ok;      // wtw_u_ok and no vertex adjacent to u after the first step
  bool cur_fresh;    // the current vertex occurs for the first time internally
  int gate;          // first internal vertex, -1 before the first step
};

struct WalkEnum {
  const Graph& g;
  int u, v, bound;
  bool paths_only;
  const std::function<void(const std::vector<int>&, WalkClassMask)>& fn;
  std::vector<int> seq;
  int dist_uv;

  void emit(const WalkFrame& f, int len) {
    WalkClassMask mask = class_bit(WalkClass::W);
    bool p = f.distinct && !set_contains(f.visited, v);
    if (p) mask |= class_bit(WalkClass::P);
    bool ip = p && f.induced_ok && (g.neighbor_set(v) & f.visited) == vbit(f.cur);
    if (ip) {
      mask |= class_bit(WalkClass::IP);
      if (len >= 3) mask |= class_bit(WalkClass::M3);
      if (len <= 2) mask |= class_bit(WalkClass::L2);
      if (len <= 3) mask |= class_bit(WalkClass::L3);
    }
    if (len == dist_uv) mask |= class_bit(WalkClass::SP);
    bool wtw = f.wtw_u_ok && (g.neighbor_set(v) & f.internals & ~vbit(f.cur)) == 0;
    if (wtw) {
      mask |= class_bit(WalkClass::WTW);
      if (f.tw_u_ok && f.cur_fresh) mask |= class_bit(WalkClass::TW);
    }
    seq.push_back(v);
    fn(seq, mask);
    seq.pop_back();
  }

  void descend(const WalkFrame& f, int depth) {
    for (int y : g.neighbors(f.cur)) {
      if (y == v && depth + 1 <= bound) emit(f, depth + 1);
      if (depth + 2 > bound) continue;
      if (paths_only && (set_contains(f.visited, y) || y == v)) continue;
      WalkFrame next;
      next.cur = y;
      next.visited = f.visited | vbit(y);
      next.internals = f.internals | vbit(y);
      next.distinct = f.distinct && !set_contains(f.visited, y);
      next.induced_ok =
          next.distinct && f.induced_ok && (g.neighbor_set(y) & f.visited) == vbit(f.cur);
      next.cur_fresh = !set_contains(f.internals, y);
      if (f.gate < 0) {
        next.gate = y;
        next.wtw_u_ok = true;
        next.tw_u_ok = true;
      } else {
        next.gate = f.gate;
        bool adj_u = g.adjacent(u, y);
        next.wtw_u_ok = f.wtw_u_ok && (!adj_u || y == f.gate);
        next.tw_u_ok = f.tw_u_ok && !adj_u;
      }
      seq.push_back(y);
      descend(next, depth + 1);
      seq.pop_back();
    }
  }
};

}  // namespace

void for_each_walk(const Graph& g, int u, int v, int max_length, bool paths_only,
                   const std::function<void(const std::vector<int>&, WalkClassMask)>& fn) {
  check_pair(g, u, v);
  if (max_length < 2) raise(Errc::ParseError, "length bound must be at least 2");
  WalkEnum e{g, u, v, max_length, paths_only, fn, {}, g.distance(u, v)};
  e.seq.push_back(u);
  WalkFrame init{u, vbit(u), 0, true, true, true, true, true, -1};
  e.descend(init, 0);
}

std::vector<Walk> enumerate_sequences(const Graph& g, int u, int v, WalkClass cls,
                                      int length_bound) {
  if (length_bound < 0) length_bound = 2 * g.vertex_count();
  bool paths_only = cls != WalkClass::TW && cls != WalkClass::WTW && cls != WalkClass::W;
  std::vector<Walk> out;
  for_each_walk(g, u, v, length_bound, paths_only,
                [&](const std::vector<int>& seq, WalkClassMask mask) {
                  if (mask & class_bit(cls)) out.push_back(Walk{seq});
                });
  return out;
}

// ---------------------------------------------------------------------------
// Exact internal-set enumeration via state search.

namespace {

struct SetState {
  int cur;
  VertexSet internals;
  int gate;        // -1 before the first step
  bool cur_fresh;  // tracked for TW only

  bool operator==(const SetState&) const = default;
};

struct SetStateHash {
  std::size_t operator()(const SetState& s) const {
    std::size_t h = std::hash<VertexSet>()(s.internals);
    h ^= std::hash<int>()((s.cur << 10) ^ ((s.gate + 1) << 1) ^ (s.cur_fresh ? 1 : 0)) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Shared transition rules for the state search and for realize. A step
// either terminates at v (can_finish) or adds y to the internal set
// (step). Only the defining clauses of each class are encoded here;
// consequences (e.g. that a toll walk never repeats an endpoint) emerge.
struct SetSearchRules {
  const Graph& g;
  int u, v;
  WalkClass cls;
  int dist_uv;

  bool can_finish(const SetState& s) const {
    if (!g.adjacent(s.cur, v)) return false;
    VertexSet vn = g.neighbor_set(v);
    switch (cls) {
      case WalkClass::W:
      case WalkClass::P:
        return true;
      case WalkClass::SP:
        return std::popcount(s.internals) + 1 == dist_uv;
      case WalkClass::IP:
        return (vn & s.internals) == vbit(s.cur);
      case WalkClass::M3:
        return (vn & s.internals) == vbit(s.cur) && std::popcount(s.internals) >= 2;
      case WalkClass::L2:
        return (vn & s.internals) == vbit(s.cur) && std::popcount(s.internals) <= 1;
      case WalkClass::L3:
        return (vn & s.internals) == vbit(s.cur) && std::popcount(s.internals) <= 2;
      case WalkClass::TW:
        return s.cur_fresh && (vn & s.internals) == vbit(s.cur);
      case WalkClass::WTW:
        return (vn & s.internals & ~vbit(s.cur)) == 0;
    }
    return false;
  }

  // Legal continuation onto y (which becomes internal); nullopt prunes.
  std::optional<SetState> step(const SetState& s, int y) const {
    switch (cls) {
      case WalkClass::W:
        break;
      case WalkClass::P:
        if (set_contains(s.internals, y) || y == u || y == v) return std::nullopt;
        break;
      case WalkClass::IP:
      case WalkClass::M3:
      case WalkClass::L2:
      case WalkClass::L3: {
        if (set_contains(s.internals, y) || y == u || y == v) return std::nullopt;
        VertexSet used = s.internals | vbit(u);
        if ((g.neighbor_set(y) & used) != vbit(s.cur)) return std::nullopt;
        int limit = cls == WalkClass::L2 ? 1 : cls == WalkClass::L3 ? 2 : 64;
        if (std::popcount(s.internals) + 1 > limit) return std::nullopt;
        break;
      }
      case WalkClass::SP: {
        if (y == u || y == v) return std::nullopt;
        int du = g.distance(u, y);
        if (du != std::popcount(s.internals) + 1) return std::nullopt;
        if (du + g.distance(y, v) != dist_uv) return std::nullopt;
        break;
      }
      case WalkClass::TW:
        if (s.gate >= 0 && g.adjacent(u, y)) return std::nullopt;
        break;
      case WalkClass::WTW:
        if (s.gate >= 0 && g.adjacent(u, y) && y != s.gate) return std::nullopt;
        break;
    }
    SetState next;
    next.cur = y;
    next.internals = s.internals | vbit(y);
    next.gate = s.gate < 0 ? y : s.gate;
    next.cur_fresh = !set_contains(s.internals, y);
    return next;
  }

  SetState initial() const { return SetState{u, 0, -1, true}; }
};

}  // namespace

bool InternalSetFamily::contains(VertexSet s) const {
  return std::binary_search(sets.begin(), sets.end(), s, set_less);
}

InternalSetFamily enumerate_internal_sets(const Graph& g, int u, int v, WalkClass cls) {
  check_pair(g, u, v);
  SetSearchRules rules{g, u, v, cls, g.distance(u, v)};
  std::unordered_set<SetState, SetStateHash> seen;
  std::vector<SetState> stack{rules.initial()};
  seen.insert(stack.back());
  std::unordered_set<VertexSet> found;
  while (!stack.empty()) {
    SetState s = stack.back();
    stack.pop_back();
    if (rules.can_finish(s)) found.insert(s.internals);
    for (int y : g.neighbors(s.cur)) {
      auto next = rules.step(s, y);
      if (next && seen.insert(*next).second) stack.push_back(*next);
    }
  }
  InternalSetFamily fam{u, v, cls, std::vector<VertexSet>(found.begin(), found.end())};
  std::sort(fam.sets.begin(), fam.sets.end(), set_less);
  return fam;
}

Walk realize(const Graph& g, int u, int v, WalkClass cls, VertexSet internal) {
  check_pair(g, u, v);
  SetSearchRules rules{g, u, v, cls, g.distance(u, v)};

  auto restricted_step = [&](const SetState& s, int y) -> std::optional<SetState> {
    if (!set_contains(internal, y)) return std::nullopt;
    return rules.step(s, y);
  };
  auto finished = [&](const SetState& s) {
    return s.internals == internal && rules.can_finish(s);
  };

  // Breadth-first over restricted states to find the minimal walk length.
  std::unordered_set<SetState, SetStateHash> seen;
  std::vector<SetState> layer{rules.initial()};
  seen.insert(layer.front());
  int min_len = -1;
  for (int depth = 0; !layer.empty() && min_len < 0; ++depth) {
    std::vector<SetState> next_layer;
    for (const SetState& s : layer) {
      if (finished(s)) {
        min_len = depth + 1;
        break;
      }
      for (int y : g.neighbors(s.cur)) {
        auto next = restricted_step(s, y);
        if (next && seen.insert(*next).second) next_layer.push_back(*next);
      }
    }
    layer = std::move(next_layer);
  }
  if (min_len < 0)
    raise(Errc::NotRealizable, "no " + std::string(to_string(cls)) + " walk between " +
                                   g.label(u) + " and " + g.label(v) +
                                   " has that internal set");

  // can_complete(s, r): a legal completion using exactly r more edges exists.
  using MemoKey = std::tuple<VertexSet, int, int, bool, int>;
  std::map<MemoKey, bool> memo;
  auto key_of = [](const SetState& s, int r) {
    return MemoKey{s.internals, s.cur, s.gate, s.cur_fresh, r};
  };
  std::function<bool(const SetState&, int)> can_complete = [&](const SetState& s, int r) -> bool {
    if (r == 1) return finished(s);
    auto key = key_of(s, r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (int y : g.neighbors(s.cur)) {
      auto next = restricted_step(s, y);
      if (next && can_complete(*next, r - 1)) {
        ok = true;
        break;
      }
    }
    memo[key] = ok;
    return ok;
  };

  // Greedy lexicographic reconstruction along shortest completions.
  Walk walk;
  walk.seq.push_back(u);
  SetState s = rules.initial();
  for (int r = min_len; r > 1; --r) {
    bool advanced = false;
    for (int y : g.neighbors(s.cur)) {
      auto next = restricted_step(s, y);
      if (next && can_complete(*next, r - 1)) {
        walk.seq.push_back(y);
        s = *next;
        advanced = true;
        break;
      }
    }
    if (!advanced) raise(Errc::NotRealizable, "internal error: reconstruction lost the witness");
  }
  walk.seq.push_back(v);
  return walk;
}

std::vector<VertexSet> minimal_sets(const std::vector<VertexSet>& sets) {
  std::vector<VertexSet> out;
  for (VertexSet s : sets) {
    bool minimal = true;
    for (VertexSet t : sets)
      if (t != s && (t & s) == t) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> maximal_sets(const std::vector<VertexSet>& sets) {
  std::vector<VertexSet> out;
  for (VertexSet s : sets) {
    bool maximal = true;
    for (VertexSet t : sets)
      if (t != s && (t & s) == s) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

}  // namespace walkdom
