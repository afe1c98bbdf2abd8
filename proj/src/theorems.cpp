#include "walkdom/theorems.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "walkdom/canonical.hpp"
#include "walkdom/graph6.hpp"
#include "walkdom/json_io.hpp"

namespace walkdom {

namespace {

TheoremSpec make_spec(std::string id, std::string statement, std::vector<std::string> pairs,
                      std::string forbidden) {
  TheoremSpec spec;
  spec.id = std::move(id);
  spec.statement = std::move(statement);
  for (const auto& p : pairs) spec.class_pairs.push_back(parse_class_pair(p));
  spec.forbidden = parse_forbidden(forbidden);
  return spec;
}

std::vector<TheoremSpec> build_registry() {
  std::vector<TheoremSpec> out;
  out.push_back(make_spec("T1", "IP/m3 = W/m3 = HHD-free", {"IP/m3", "W/m3"}, "HHD"));
  out.push_back(make_spec("T2", "WTW/m3 = TW/m3 = HHD-free", {"WTW/m3", "TW/m3"}, "HHD"));
  out.push_back(
      make_spec("T3", "l2/m3 = l3/m3 = SP/m3 = HHD-free", {"l2/m3", "l3/m3", "SP/m3"}, "HHD"));
  out.push_back(make_spec("T4", "m3/W = {P4,A,co-gemK2,C5,co-X58,X96,F3}-free", {"m3/W"},
                          "P4,A,co-gemK2,C5,co-X58,X96,F3"));
  out.push_back(
      make_spec("T5", "m3/IP = {hole,D,Antenna,X5}-free", {"m3/IP"}, "hole,D,Antenna,X5"));
  out.push_back(make_spec("T6", "m3/SP = {hole,D,X5,F}-free", {"m3/SP"}, "hole,D,X5,F"));
  out.push_back(make_spec("T7", "m3/l2 = hole-free", {"m3/l2"}, "hole"));
  out.push_back(make_spec("T8", "m3/l3 = {hole,D,F,X5}-free", {"m3/l3"}, "hole,D,F,X5"));
  return out;
}

template <typename Fn>
void parallel_for(int count, int jobs, Fn fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&] {
      try {
        for (int i; (i = next.fetch_add(1)) < count;) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    });
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

const std::vector<TheoremSpec>& registry() {
  static const std::vector<TheoremSpec> specs = build_registry();
  return specs;
}

const TheoremSpec& registry_entry(const std::string& id) {
  for (const auto& spec : registry())
    if (spec.id == id) return spec;
  raise(Errc::ParseError, "unknown theorem id \"" + id + "\" (expected T1..T8)");
}

std::vector<Graph> generate_corpus(int max_n) {
  if (max_n < 1 || max_n > 8)
    raise(Errc::SizeTooLarge, "built-in corpus generator supports 1 <= max_n <= 8");
  std::vector<Graph> corpus{Graph::from_edge_list(1, {})};
  std::vector<std::string> level_canon{encode_graph6(corpus.front())};
  for (int n = 2; n <= max_n; ++n) {
    // Every connected graph on n vertices arises from a connected graph on
    // n-1 vertices by adding one vertex with a nonempty neighborhood (a
    // spanning tree leaf can always be removed).
    std::vector<std::string> parents = std::move(level_canon);
    std::unordered_set<std::string> seen;
    std::vector<std::string> next;
    for (const std::string& canon : parents) {
      Graph parent = decode_graph6(canon);
      auto base_edges = parent.edges();
      for (VertexSet mask = 1; mask < vbit(n - 1); ++mask) {
        auto edges = base_edges;
        for (int w : set_to_vertices(mask)) edges.emplace_back(w, n - 1);
        std::string c = canonical_form(Graph::from_edge_list(n, edges));
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    std::sort(next.begin(), next.end());
    for (const std::string& c : next) corpus.push_back(decode_graph6(c));
    level_canon = std::move(next);
  }
  return corpus;
}

Report verify_theorem(const TheoremSpec& spec, const std::vector<Graph>& corpus, int jobs) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  report.theorem_id = spec.id;
  report.statement = spec.statement;
  report.corpus = std::to_string(corpus.size()) + " connected graphs";
  report.graphs_checked = static_cast<int>(corpus.size());

  std::vector<std::vector<Disagreement>> found(corpus.size());
  parallel_for(static_cast<int>(corpus.size()), jobs, [&](int gi) {
    const Graph& g = corpus[gi];
    if (!g.connected()) raise(Errc::DisconnectedGraph, "corpus graphs must be connected");
    FreeResult free = is_free(g, spec.forbidden);
    MembershipEvaluator eval(g);
    for (ClassPair pair : spec.class_pairs) {
      Verdict verdict = eval.member(pair, true);
      if (!verdict.member) {
        // Negative verdicts are double-checked: exhaustive scan must agree
        // bit for bit, and the certificate must replay.
        Verdict full = eval.member(pair, false);
        if (full.member || !(full.certificate == verdict.certificate))
          throw std::logic_error("minmax optimization diverged from exhaustive scan");
        if (!certificate_replays(g, pair, *verdict.certificate))
          throw std::logic_error("certificate failed to replay");
      }
      if (verdict.member == free.free) continue;
      Disagreement d;
      d.graph6 = encode_graph6(g);
      d.pair = pair;
      d.definition_member = verdict.member;
      d.forbidden_free = free.free;
      d.certificate = verdict.certificate;
      d.offender = free.free ? "" : free.offender;
      d.embedding = free.embedding;
      found[gi].push_back(std::move(d));
    }
  });
  for (auto& per_graph : found)
    for (auto& d : per_graph) report.disagreements.push_back(std::move(d));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Report> verify_registry(const std::vector<Graph>& corpus, int jobs) {
  std::vector<Report> out;
  for (const auto& spec : registry()) out.push_back(verify_theorem(spec, corpus, jobs));
  return out;
}

std::string report_table(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.theorem_id << ": " << r.graphs_checked << " graphs, " << r.disagreements.size()
        << " disagreements\n";
    for (const auto& d : r.disagreements) {
      out << "  " << d.graph6 << "  " << to_string(d.pair)
          << "  definition=" << (d.definition_member ? "member" : "non-member")
          << "  forbidden=" << (d.forbidden_free ? "free" : ("contains " + d.offender)) << "\n";
    }
  }
  return out.str();
}

std::string reports_to_json(const std::vector<Report>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json disagreements = nlohmann::json::array();
    for (const auto& d : r.disagreements) {
      Graph g = decode_graph6(d.graph6);
      nlohmann::json item{{"graph6", d.graph6},
                          {"class_pair", to_string(d.pair)},
                          {"definition_member", d.definition_member},
                          {"forbidden_free", d.forbidden_free}};
      if (d.certificate) item["certificate"] = certificate_json(g, d.pair, *d.certificate, d.graph6);
      if (!d.offender.empty()) {
        item["offender"] = d.offender;
        nlohmann::json emb = nlohmann::json::array();
        for (int x : d.embedding) emb.push_back(g.label(x));
        item["embedding"] = emb;
      }
      disagreements.push_back(std::move(item));
    }
    arr.push_back(nlohmann::json{{"theorem", r.theorem_id},
                                 {"statement", r.statement},
                                 {"corpus", r.corpus},
                                 {"graphs", r.graphs_checked},
                                 {"disagreements", std::move(disagreements)}});
  }
  return arr.dump(2);
}

std::vector<InclusionViolation> check_walk_class_inclusions(const Graph& g, int bound) {
  if (!g.connected()) raise(Errc::DisconnectedGraph, "inclusion checks need a connected graph");
  if (bound < 0) bound = 2 * g.vertex_count();
  static constexpr std::pair<WalkClass, WalkClass> kInclusions[] = {
      {WalkClass::SP, WalkClass::IP}, {WalkClass::M3, WalkClass::IP},
      {WalkClass::L2, WalkClass::IP}, {WalkClass::L3, WalkClass::IP},
      {WalkClass::L2, WalkClass::L3}, {WalkClass::L2, WalkClass::SP},
      {WalkClass::IP, WalkClass::P},  {WalkClass::IP, WalkClass::TW},
      {WalkClass::TW, WalkClass::WTW}, {WalkClass::P, WalkClass::W},
      {WalkClass::WTW, WalkClass::W}};
  std::vector<InclusionViolation> violations;
  const int n = g.vertex_count();
  for (int u = 0; u < n && violations.size() < 32; ++u) {
    for (int v = u + 1; v < n && violations.size() < 32; ++v) {
      if (g.adjacent(u, v)) continue;
      for_each_walk(g, u, v, bound, false, [&](const std::vector<int>& seq, WalkClassMask mask) {
        for (auto [from, to] : kInclusions)
          if ((mask & class_bit(from)) && !(mask & class_bit(to)) && violations.size() < 32)
            violations.push_back({u, v, seq, from, to});
      });
    }
  }
  return violations;
}

}  // namespace walkdom
