#pragma once

#include <string>
#include <vector>

#include "walkdom/domination.hpp"
#include "walkdom/patterns.hpp"

namespace walkdom {

enum class CandidateTag { ContainsKnown, New };

/// A minimal non-member: the graph is outside the class while every proper
/// induced subgraph (componentwise for disconnected ones) is inside.
struct MinerCandidate {
  std::string graph6;  // canonical
  Graph graph;
  CandidateTag tag = CandidateTag::New;
  std::string known_name;  // when tag == ContainsKnown
  Certificate certificate;
};

struct MinerResult {
  ClassPair pair;
  std::string corpus;
  std::vector<MinerCandidate> candidates;  // sorted by (n, canonical form)
  std::string caveat;
};

/// Carried by every miner report. Minimality is checked by enumerating all
/// proper induced subgraphs directly, because hereditariness of the mined
/// classes is exactly what is not known.
extern const char* const kHereditarinessCaveat;

/// Scans a deduplicated corpus of connected graphs for minimal non-members
/// of the class. Every reported candidate carries a replayable certificate.
MinerResult minimal_non_members(ClassPair pair, const std::vector<Graph>& corpus, int jobs = 1);

/// Tags candidates isomorphic to a member of a known obstruction set
/// (minimality already precludes proper containment of a known non-member).
MinerResult classify_candidates(MinerResult result, const std::vector<ForbiddenSet>& known);

/// Text form: caveat comment lines, then one "graph6 TAB classification"
/// line per candidate. JSON form adds the certificates.
std::string miner_result_text(const MinerResult& result);
std::string miner_result_json(const MinerResult& result);

}  // namespace walkdom
