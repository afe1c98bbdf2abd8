#pragma once

#include <map>
#include <optional>
#include <string>

#include "walkdom/walks.hpp"

namespace walkdom {

/// The graph class A/B: every A-walk between each non-adjacent pair must
/// dominate every B-walk between that pair.
struct ClassPair {
  WalkClass dominator;  // A
  WalkClass dominatee;  // B

  bool operator==(const ClassPair&) const = default;
  auto operator<=>(const ClassPair&) const = default;
};

ClassPair parse_class_pair(const std::string& text);  // "A/B", e.g. "m3/SP"
std::string to_string(ClassPair pair);

struct DominationResult {
  bool dominates = false;
  int undominated = -1;  // witness vertex when !dominates
};

/// Walk W dominates walk W2 when every internal vertex of W2 belongs to W
/// or is adjacent to an internal vertex of W. On failure the witness is the
/// earliest-position undominated internal vertex of W2.
DominationResult dominates(const Graph& g, const Walk& w, const Walk& w2);

/// Set-level form; agrees with dominates() on any walks realizing the sets.
/// Monotone: growing the dominator set or shrinking the dominatee set
/// preserves domination. Witness is the smallest undominated vertex.
DominationResult dominates_sets(const Graph& g, int u, int v, VertexSet dominator,
                                VertexSet dominatee);

/// Replayable refutation of membership: dominator in A(u,v), dominatee in
/// B(u,v), and the undominated vertex is internal in the dominatee, not on
/// the dominator, and adjacent to none of its internal vertices.
struct Certificate {
  int u = -1, v = -1;
  Walk dominator;
  Walk dominatee;
  int undominated = -1;

  bool operator==(const Certificate&) const = default;
};

struct Verdict {
  bool member = false;
  std::optional<Certificate> certificate;  // present iff !member
};

/// Checks a certificate against the definitions; used by the verification
/// runner and the miner before reporting anything.
bool certificate_replays(const Graph& g, ClassPair pair, const Certificate& cert);

/// Membership evaluator with a per-graph cache of internal-set families,
/// shared when several class pairs are decided for one graph.
class MembershipEvaluator {
 public:
  explicit MembershipEvaluator(const Graph& g) : g_(g) {}

  /// Decides membership of the (connected) graph in A/B. Scans non-adjacent
  /// pairs u < v in lexicographic order; the first failure yields the
  /// certificate, realized from the lexicographically first failing set
  /// pair of the full families. With minmax the positive scan tests only
  /// inclusion-minimal dominator sets against inclusion-maximal dominatee
  /// sets (behavior-identical by monotonicity).
  Verdict member(ClassPair pair, bool minmax = true);

  const InternalSetFamily& family(int u, int v, WalkClass cls);

 private:
  const Graph& g_;
  std::map<std::tuple<int, int, WalkClass>, InternalSetFamily> cache_;
};

/// One-shot membership; DisconnectedGraph error on disconnected input.
Verdict is_member(const Graph& g, ClassPair pair, bool minmax = true);

/// Componentwise rule used on induced subgraphs: a disconnected graph is a
/// member iff every connected component is (cross-component pairs have
/// empty walk families, so this matches the pairwise definition).
bool is_member_componentwise(const Graph& g, ClassPair pair);

/// Certificate JSON per the external schema (labels, not indices).
std::string certificate_to_json(const Graph& g, ClassPair pair, const Certificate& cert);

}  // namespace walkdom
