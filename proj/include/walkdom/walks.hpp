#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "walkdom/graph.hpp"

namespace walkdom {

/// The walk families between a pair of non-adjacent vertices.
///   SP  shortest path (length equal to the distance)
///   IP  induced path (vertices adjacent iff consecutive)
///   P   path (distinct vertices)
///   M3  induced path of length at least three
///   L2  induced path of length at most two
///   L3  induced path of length at most three
///   TW  toll walk: the only internal vertex adjacent to u is the first one,
///       the only one adjacent to v is the last one, and those two gate
///       vertices each occur exactly once
///   WTW weakly toll walk: the toll walk conditions without the
///       single-occurrence requirement on the gates
///   W   arbitrary walk
/// The adjacency restrictions for TW and WTW quantify over the set of
/// internal vertices, so an endpoint may reoccur internally in a weakly
/// toll walk when flanked by its gate.
enum class WalkClass { SP, IP, P, M3, L2, L3, TW, WTW, W };

inline constexpr std::array<WalkClass, 9> kAllWalkClasses = {
    WalkClass::SP, WalkClass::IP, WalkClass::P,  WalkClass::M3, WalkClass::L2,
    WalkClass::L3, WalkClass::TW, WalkClass::WTW, WalkClass::W};

const char* to_string(WalkClass cls);
WalkClass parse_walk_class(const std::string& token);  // "SP" "IP" "P" "m3" "l2" "l3" "TW" "WTW" "W"

/// A walk: vertex sequence with consecutive vertices adjacent, fixed
/// endpoints, repetition allowed. Positions other than first and last are
/// the internal vertices.
struct Walk {
  std::vector<int> seq;

  int u() const { return seq.front(); }
  int v() const { return seq.back(); }
  int length() const { return static_cast<int>(seq.size()) - 1; }
  VertexSet internal_set() const;
  VertexSet vertex_set() const;
  bool operator==(const Walk&) const = default;
};

/// Validates walk structure: consecutive adjacency (NotAWalk otherwise) and
/// distinct non-adjacent endpoints (AdjacentEndpoints otherwise).
void validate_walk(const Graph& g, const std::vector<int>& seq);

/// True iff the sequence is a member of the class, per the definitions above.
bool satisfies_class(const Graph& g, const std::vector<int>& seq, WalkClass cls);

using WalkClassMask = std::uint16_t;
inline constexpr WalkClassMask class_bit(WalkClass cls) {
  return static_cast<WalkClassMask>(1u << static_cast<int>(cls));
}

/// Class membership of one walk for all nine classes at once.
WalkClassMask classify_walk(const Graph& g, const std::vector<int>& seq);

/// Streams every uv-walk of length <= max_length in lexicographic
/// backtracking order, with its class mask. The mask is maintained
/// incrementally; it must agree with classify_walk (tested). With
/// paths_only, walks that repeat a vertex are pruned (sound for the six
/// path classes).
void for_each_walk(const Graph& g, int u, int v, int max_length, bool paths_only,
                   const std::function<void(const std::vector<int>&, WalkClassMask)>& fn);

/// All walks of the class with length <= length_bound (default 2n). For the
/// finite classes the bound is immaterial once >= n-1; for TW/WTW/W this is
/// the explicitly bounded oracle used to test the set-based enumerator.
std::vector<Walk> enumerate_sequences(const Graph& g, int u, int v, WalkClass cls,
                                      int length_bound = -1);

/// The realizable internal-vertex sets of a walk family. Finite and exact
/// even for the infinite classes: a search over states (current vertex,
/// accumulated internal set, class flags) in which a step either terminates
/// at v or adds the vertex to the internal set.
struct InternalSetFamily {
  int u = -1, v = -1;
  WalkClass cls = WalkClass::W;
  std::vector<VertexSet> sets;  // sorted by set_less, no duplicates

  bool contains(VertexSet s) const;
  bool empty() const { return sets.empty(); }
};

InternalSetFamily enumerate_internal_sets(const Graph& g, int u, int v, WalkClass cls);

/// A concrete walk of the class whose internal-vertex set is exactly
/// `internal`: the shortest such walk, ties broken by lexicographic vertex
/// order at every step. Fails with NotRealizable iff the set is not in
/// enumerate_internal_sets.
Walk realize(const Graph& g, int u, int v, WalkClass cls, VertexSet internal);

/// Inclusion-minimal / inclusion-maximal members, order preserved.
std::vector<VertexSet> minimal_sets(const std::vector<VertexSet>& sets);
std::vector<VertexSet> maximal_sets(const std::vector<VertexSet>& sets);

}  // namespace walkdom
