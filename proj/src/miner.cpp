#include "walkdom/miner.hpp"

#include <map>
#include <sstream>

#include "walkdom/canonical.hpp"
#include "walkdom/graph6.hpp"
#include "walkdom/json_io.hpp"

namespace walkdom {

const char* const kHereditarinessCaveat =
    "Whether this class is closed under induced subgraphs is not known. The list below "
    "enumerates minimal non-members in the induced-subgraph order, which is exact regardless; "
    "reading it as a complete forbidden-subgraph characterization is conditional on the class "
    "being hereditary.";

namespace {

// Membership of an induced subgraph, componentwise, memoized by canonical
// form since many subsets of one host are isomorphic.
bool member_cached(const Graph& g, ClassPair pair, std::map<std::string, bool>& cache) {
  std::string canon = canonical_form(g);
  auto it = cache.find(canon);
  if (it != cache.end()) return it->second;
  bool member = true;
  if (g.connected()) {
    member = is_member(g, pair).member;
  } else {
    for (VertexSet comp : g.components()) {
      auto [sub, _] = g.induced_subgraph(comp);
      if (!member_cached(sub, pair, cache)) {
        member = false;
        break;
      }
    }
  }
  cache.emplace(std::move(canon), member);
  return member;
}

}  // namespace

MinerResult minimal_non_members(ClassPair pair, const std::vector<Graph>& corpus, int jobs) {
  (void)jobs;  // the subset cache dominates; the scan is fast enough serial
  MinerResult result;
  result.pair = pair;
  result.corpus = std::to_string(corpus.size()) + " connected graphs";
  result.caveat = kHereditarinessCaveat;
  std::map<std::string, bool> cache;
  for (const Graph& g : corpus) {
    if (!g.connected()) raise(Errc::DisconnectedGraph, "miner corpus graphs must be connected");
    Verdict verdict = is_member(g, pair);
    if (verdict.member) continue;
    bool minimal = true;
    const VertexSet all = g.all_vertices();
    for (VertexSet keep = 1; keep < all && minimal; ++keep) {
      auto [sub, _] = g.induced_subgraph(keep);
      if (!member_cached(sub, pair, cache)) minimal = false;
    }
    if (!minimal) continue;
    // Candidates are emitted in canonical labeling so independent runs on
    // differently labeled corpora diff cleanly; the certificate is
    // recomputed against that labeling.
    std::string canon = canonical_form(g);
    Graph canonical_graph = decode_graph6(canon);
    Certificate cert = *is_member(canonical_graph, pair).certificate;
    result.candidates.push_back(MinerCandidate{std::move(canon), std::move(canonical_graph),
                                               CandidateTag::New, "", std::move(cert)});
  }
  std::sort(result.candidates.begin(), result.candidates.end(),
            [](const MinerCandidate& a, const MinerCandidate& b) {
              return a.graph6 < b.graph6;  // graph6 sorts by n, then bits
            });
  return result;
}

MinerResult classify_candidates(MinerResult result, const std::vector<ForbiddenSet>& known) {
  for (MinerCandidate& c : result.candidates) {
    c.tag = CandidateTag::New;
    c.known_name.clear();
    for (const ForbiddenSet& fs : known) {
      for (const ForbiddenItem& item : fs.items) {
        bool match = false;
        if (item.hole_family) {
          // A hole is a chordless cycle on >= 5 vertices: connected and
          // 2-regular.
          int n = c.graph.vertex_count();
          match = n >= 5 && c.graph.edge_count() == n && c.graph.connected();
          if (match)
            for (int v = 0; v < n; ++v) match = match && c.graph.degree(v) == 2;
        } else {
          match = is_isomorphic(c.graph, *item.pattern);
        }
        if (match) {
          c.tag = CandidateTag::ContainsKnown;
          c.known_name = item.name;
          break;
        }
      }
      if (c.tag == CandidateTag::ContainsKnown) break;
    }
  }
  return result;
}

std::string miner_result_text(const MinerResult& result) {
  std::ostringstream out;
  out << "# minimal non-members of " << to_string(result.pair) << " over " << result.corpus
      << "\n";
  out << "# " << result.caveat << "\n";
  for (const auto& c : result.candidates) {
    out << c.graph6 << '\t';
    if (c.tag == CandidateTag::ContainsKnown)
      out << "CONTAINS_KNOWN(" << c.known_name << ")";
    else
      out << "NEW";
    out << '\n';
  }
  return out.str();
}

std::string miner_result_json(const MinerResult& result) {
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& c : result.candidates) {
    nlohmann::json item{
        {"graph6", c.graph6},
        {"dot", c.graph.to_dot("candidate")},
        {"classification", c.tag == CandidateTag::ContainsKnown ? "CONTAINS_KNOWN" : "NEW"},
        {"certificate", certificate_json(c.graph, result.pair, c.certificate, c.graph6)}};
    if (c.tag == CandidateTag::ContainsKnown) item["known_name"] = c.known_name;
    candidates.push_back(std::move(item));
  }
  return nlohmann::json{{"class_pair", to_string(result.pair)},
                        {"corpus", result.corpus},
                        {"caveat", result.caveat},
                        {"candidates", std::move(candidates)}}
      .dump(2);
}

}  // namespace walkdom
