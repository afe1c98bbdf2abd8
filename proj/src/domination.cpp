#include "walkdom/domination.hpp"

#include "walkdom/graph6.hpp"
#include "walkdom/json_io.hpp"

namespace walkdom {

ClassPair parse_class_pair(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size())
    raise(Errc::ParseError, "class pair must look like \"A/B\", e.g. \"m3/SP\"");
  return ClassPair{parse_walk_class(text.substr(0, slash)),
                   parse_walk_class(text.substr(slash + 1))};
}

std::string to_string(ClassPair pair) {
  return std::string(to_string(pair.dominator)) + "/" + to_string(pair.dominatee);
}

DominationResult dominates(const Graph& g, const Walk& w, const Walk& w2) {
  validate_walk(g, w.seq);
  validate_walk(g, w2.seq);
  if (w.u() != w2.u() || w.v() != w2.v())
    raise(Errc::EndpointMismatch, "walks must share both endpoints");
  VertexSet on_w = w.vertex_set();
  VertexSet internal_w = w.internal_set();
  for (std::size_t i = 1; i + 1 < w2.seq.size(); ++i) {
    int x = w2.seq[i];
    if (set_contains(on_w, x)) continue;
    if (g.neighbor_set(x) & internal_w) continue;
    return {false, x};
  }
  return {true, -1};
}

DominationResult dominates_sets(const Graph& g, int u, int v, VertexSet dominator,
                                VertexSet dominatee) {
  VertexSet covered = dominator | vbit(u) | vbit(v);
  for (VertexSet rest = dominatee; rest;) {
    int x = std::countr_zero(rest);
    rest &= rest - 1;
    if (set_contains(covered, x)) continue;
    if (g.neighbor_set(x) & dominator) continue;
    return {false, x};
  }
  return {true, -1};
}

bool certificate_replays(const Graph& g, ClassPair pair, const Certificate& cert) {
  try {
    if (cert.dominator.u() != cert.u || cert.dominator.v() != cert.v) return false;
    if (cert.dominatee.u() != cert.u || cert.dominatee.v() != cert.v) return false;
    if (!satisfies_class(g, cert.dominator.seq, pair.dominator)) return false;
    if (!satisfies_class(g, cert.dominatee.seq, pair.dominatee)) return false;
    int x = cert.undominated;
    if (!set_contains(cert.dominatee.internal_set(), x)) return false;
    if (set_contains(cert.dominator.vertex_set(), x)) return false;
    if (g.neighbor_set(x) & cert.dominator.internal_set()) return false;
    return !dominates(g, cert.dominator, cert.dominatee).dominates;
  } catch (const Error&) {
    return false;
  }
}

const InternalSetFamily& MembershipEvaluator::family(int u, int v, WalkClass cls) {
  auto key = std::make_tuple(u, v, cls);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, enumerate_internal_sets(g_, u, v, cls)).first;
  return it->second;
}

Verdict MembershipEvaluator::member(ClassPair pair, bool minmax) {
  if (!g_.connected())
    raise(Errc::DisconnectedGraph, "membership is defined for connected graphs");
  const int n = g_.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g_.adjacent(u, v)) continue;
      const auto& fam_a = family(u, v, pair.dominator);
      if (fam_a.empty()) continue;  // vacuous
      const auto& fam_b = family(u, v, pair.dominatee);
      if (fam_b.empty()) continue;

      auto scan = [&](const std::vector<VertexSet>& as,
                      const std::vector<VertexSet>& bs) -> std::optional<std::pair<VertexSet, VertexSet>> {
        for (VertexSet sa : as)
          for (VertexSet sb : bs)
            if (!dominates_sets(g_, u, v, sa, sb).dominates) return std::make_pair(sa, sb);
        return std::nullopt;
      };

      std::optional<std::pair<VertexSet, VertexSet>> failure;
      if (minmax)
        failure = scan(minimal_sets(fam_a.sets), maximal_sets(fam_b.sets));
      else
        failure = scan(fam_a.sets, fam_b.sets);
      if (!failure) continue;

      // Certificate from the first failing set pair of the full families,
      // independent of the minmax optimization.
      failure = scan(fam_a.sets, fam_b.sets);
      auto [sa, sb] = *failure;
      Certificate cert;
      cert.u = u;
      cert.v = v;
      cert.dominator = realize(g_, u, v, pair.dominator, sa);
      cert.dominatee = realize(g_, u, v, pair.dominatee, sb);
      cert.undominated = dominates_sets(g_, u, v, sa, sb).undominated;
      return Verdict{false, cert};
    }
  }
  return Verdict{true, std::nullopt};
}

Verdict is_member(const Graph& g, ClassPair pair, bool minmax) {
  MembershipEvaluator eval(g);
  return eval.member(pair, minmax);
}

bool is_member_componentwise(const Graph& g, ClassPair pair) {
  if (g.connected()) return is_member(g, pair).member;
  for (VertexSet comp : g.components()) {
    auto [sub, _] = g.induced_subgraph(comp);
    if (!is_member(sub, pair).member) return false;
  }
  return true;
}

nlohmann::json certificate_json(const Graph& g, ClassPair pair, const Certificate& cert,
                                const std::string& graph6) {
  auto walk_labels = [&](const Walk& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (int x : w.seq) arr.push_back(g.label(x));
    return arr;
  };
  return nlohmann::json{{"graph6", graph6},
                        {"class_pair", to_string(pair)},
                        {"u", g.label(cert.u)},
                        {"v", g.label(cert.v)},
                        {"dominator", walk_labels(cert.dominator)},
                        {"dominatee", walk_labels(cert.dominatee)},
                        {"undominated", g.label(cert.undominated)}};
}

std::string certificate_to_json(const Graph& g, ClassPair pair, const Certificate& cert) {
  return certificate_json(g, pair, cert, encode_graph6(g)).dump();
}

}  // namespace walkdom
