// Acceptance suite: runs every acceptance criterion at its stated strength
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "walkdom/canonical.hpp"
#include "walkdom/graph6.hpp"
#include "walkdom/miner.hpp"
#include "walkdom/theorems.hpp"

using namespace walkdom;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%d] %-34s %s%s%s\n", index, name.c_str(), ok ? "PASS" : "FAIL",
              detail.empty() ? "" : "  ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

VertexSet vs(std::initializer_list<int> xs) {
  VertexSet s = 0;
  for (int x : xs) s |= vbit(x);
  return s;
}

// ---- criterion 1: theorem cross-validation over the n<=7 corpus ----------

void criterion_theorems(const std::vector<Graph>& corpus6, const std::vector<Graph>& corpus7) {
  std::ostringstream detail;
  bool ok = corpus7.size() == 996;
  if (!ok) detail << "corpus size " << corpus7.size() << " != 996; ";

  auto t6 = std::chrono::steady_clock::now();
  auto reports6 = verify_registry(corpus6, 4);
  double small_run = seconds_since(t6);
  ok = ok && small_run < 60.0;

  auto reports7 = verify_registry(corpus7, 4);
  std::size_t total = 0;
  for (const Report& r : reports7) {
    total += r.disagreements.size();
    if (!r.disagreements.empty()) {
      detail << r.theorem_id << " has " << r.disagreements.size() << " disagreement(s):";
      for (const Disagreement& d : r.disagreements)
        detail << ' ' << d.graph6 << (d.definition_member ? "[member," : "[non-member,")
               << (d.forbidden_free ? "free]" : ("contains " + d.offender + "]"));
      detail << "; ";
    }
  }
  std::size_t total6 = 0;
  for (const Report& r : reports6) total6 += r.disagreements.size();
  detail << "n<=6: " << total6 << " disagreements in " << std::fixed << small_run << "s";
  ok = ok && total == 0 && total6 == 0;
  report(1, "theorem cross-validation n<=7", ok, detail.str());
}

// ---- criterion 2: reference refutation certificates -----------------------

struct ReferenceCase {
  const char* graph;
  const char* pair;
  Certificate expected;        // deterministic engine certificate
  std::vector<int> quoted_dominator;  // the documented proof witness
  std::vector<int> quoted_dominatee;
  int quoted_undominated;
  bool quoted_is_engine;  // witness coincides with the engine certificate
};

void criterion_certificates() {
  const std::vector<ReferenceCase> cases = {
      {"house", "l2/m3", {0, 2, Walk{{0, 1, 2}}, Walk{{0, 4, 3, 2}}, 3},
       {0, 1, 2}, {0, 4, 3, 2}, 3, true},
      {"C5", "m3/l2", {0, 2, Walk{{0, 4, 3, 2}}, Walk{{0, 1, 2}}, 1},
       {0, 4, 3, 2}, {0, 1, 2}, 1, true},
      {"D", "m3/SP", {0, 3, Walk{{0, 1, 2, 3}}, Walk{{0, 5, 4, 3}}, 5},
       {0, 1, 2, 3}, {0, 5, 4, 3}, 5, true},
      {"X5", "m3/SP", {0, 3, Walk{{0, 1, 2, 3}}, Walk{{0, 5, 4, 3}}, 4},
       {0, 1, 2, 3}, {0, 5, 4, 3}, 4, true},
      {"F", "m3/SP", {0, 3, Walk{{0, 6, 5, 4, 3}}, Walk{{0, 1, 2, 3}}, 1},
       {1, 0, 6, 5, 4}, {1, 2, 3, 4}, 3, false},
      {"D", "m3/l3", {0, 3, Walk{{0, 1, 2, 3}}, Walk{{0, 5, 4, 3}}, 5},
       {0, 5, 4, 3}, {0, 1, 2, 3}, 2, false},
      {"F", "m3/l3", {0, 3, Walk{{0, 6, 5, 4, 3}}, Walk{{0, 1, 2, 3}}, 1},
       {1, 0, 6, 5, 4}, {1, 2, 3, 4}, 3, false},
  };
  bool ok = true;
  std::ostringstream detail;
  int exact = 0;
  for (const ReferenceCase& rc : cases) {
    const Graph& g = catalog_entry(rc.graph).graph;
    ClassPair pair = parse_class_pair(rc.pair);
    Verdict v = is_member(g, pair);
    bool case_ok = !v.member && v.certificate == rc.expected &&
                   certificate_replays(g, pair, *v.certificate);
    // the documented witness must itself replay as a refutation
    Walk qa{rc.quoted_dominator}, qb{rc.quoted_dominatee};
    case_ok = case_ok && satisfies_class(g, qa.seq, pair.dominator) &&
              satisfies_class(g, qb.seq, pair.dominatee);
    DominationResult dr = dominates(g, qa, qb);
    case_ok = case_ok && !dr.dominates && dr.undominated == rc.quoted_undominated;
    if (rc.quoted_is_engine) ++exact;
    if (!case_ok) {
      ok = false;
      detail << rc.graph << '/' << rc.pair << " failed; ";
    }
  }
  detail << exact << "/7 engine certificates equal the documented witnesses, "
         << (cases.size() - exact) << " are valid lexicographic alternates";
  report(2, "reference refutation certificates", ok, detail.str());
}

// ---- criterion 3: internal-set enumerator vs bounded sequence oracle ------

void criterion_oracle_equivalence(const std::vector<Graph>& corpus5) {
  long exceptions = 0, checked = 0;
  for (const Graph& g : corpus5) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        std::set<VertexSet> projected[9], stable[9];
        for_each_walk(g, u, v, 2 * n, false,
                      [&](const std::vector<int>& seq, WalkClassMask mask) {
                        VertexSet s = Walk{seq}.internal_set();
                        for (int c = 0; c < 9; ++c)
                          if (mask & (WalkClassMask{1} << c)) projected[c].insert(s);
                      });
        for_each_walk(g, u, v, 2 * n + 2, false,
                      [&](const std::vector<int>& seq, WalkClassMask mask) {
                        VertexSet s = Walk{seq}.internal_set();
                        for (int c = 0; c < 9; ++c)
                          if (mask & (WalkClassMask{1} << c)) stable[c].insert(s);
                      });
        for (WalkClass cls : kAllWalkClasses) {
          int c = static_cast<int>(cls);
          auto fam = enumerate_internal_sets(g, u, v, cls);
          std::set<VertexSet> exact(fam.sets.begin(), fam.sets.end());
          ++checked;
          if (exact != projected[c] || projected[c] != stable[c]) ++exceptions;
        }
      }
  }
  std::ostringstream detail;
  detail << checked << " family comparisons, " << exceptions << " exceptions";
  report(3, "oracle equivalence n<=5", exceptions == 0, detail.str());
}

// ---- criterion 4: walk class inclusion suite ------------------------------

void criterion_inclusions(const std::vector<Graph>& corpus6) {
  long violations = 0;
  for (const Graph& g : corpus6) violations += check_walk_class_inclusions(g).size();
  std::ostringstream detail;
  detail << corpus6.size() << " graphs, " << violations << " violations";
  report(4, "walk class inclusions n<=6", violations == 0, detail.str());
}

// ---- criterion 5: detectors vs brute force --------------------------------

void criterion_detectors(const std::vector<Graph>& corpus6, const std::vector<Graph>& corpus7) {
  long hole_mismatch = 0;
  for (const Graph& g : corpus7)
    if (has_hole(g).has_value() != oracle::has_hole_bruteforce(g)) ++hole_mismatch;
  long pattern_mismatch = 0;
  for (const Graph& g : corpus6)
    for (const PatternEntry& e : catalog()) {
      bool fast = contains_induced(g, e.graph).has_value();
      bool brute = e.graph.vertex_count() <= g.vertex_count()
                       ? oracle::contains_induced_bruteforce(g, e.graph)
                       : false;
      if (fast != brute) ++pattern_mismatch;
    }
  std::ostringstream detail;
  detail << "hole mismatches " << hole_mismatch << " on n<=7, pattern mismatches "
         << pattern_mismatch << " on n<=6";
  report(5, "detectors vs brute force", hole_mismatch == 0 && pattern_mismatch == 0,
         detail.str());
}

// ---- criterion 6: miner ground truth and sandwich consistency -------------

void criterion_miner(const std::vector<Graph>& corpus6) {
  std::ostringstream detail;
  auto forms = [](const MinerResult& r) {
    std::set<std::string> out;
    for (const auto& c : r.candidates) out.insert(c.graph6);
    return out;
  };
  Graph c6 = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  std::set<std::string> holes = {canonical_form(catalog_entry("C5").graph), canonical_form(c6)};
  std::set<std::string> m3ip_expected = holes;
  for (const char* name : {"D", "Antenna", "X5"})
    m3ip_expected.insert(canonical_form(catalog_entry(name).graph));

  MinerResult l2 = minimal_non_members(parse_class_pair("m3/l2"), corpus6);
  bool ok = forms(l2) == holes;
  if (!ok) detail << "m3/l2 ground truth differs; ";
  MinerResult ip = minimal_non_members(parse_class_pair("m3/IP"), corpus6);
  if (forms(ip) != m3ip_expected) {
    ok = false;
    detail << "m3/IP ground truth differs; ";
  }

  MinerResult tw = minimal_non_members(parse_class_pair("m3/TW"), corpus6);
  MinerResult wtw = minimal_non_members(parse_class_pair("m3/WTW"), corpus6);
  if (tw.caveat != kHereditarinessCaveat || wtw.caveat != kHereditarinessCaveat ||
      miner_result_text(tw).find(kHereditarinessCaveat) == std::string::npos) {
    ok = false;
    detail << "caveat missing; ";
  }
  for (const MinerResult* r : {&l2, &ip, &tw, &wtw})
    for (const auto& c : r->candidates)
      if (!certificate_replays(c.graph, r->pair, c.certificate)) {
        ok = false;
        detail << "certificate replay failed for " << c.graph6 << "; ";
      }

  // sandwich consistency: m3/IP obstructions are non-members of both open
  // classes; m3/W members are members of both
  long sandwich_violations = 0;
  for (const auto& c : ip.candidates) {
    if (is_member(c.graph, parse_class_pair("m3/TW")).member) ++sandwich_violations;
    if (is_member(c.graph, parse_class_pair("m3/WTW")).member) ++sandwich_violations;
  }
  for (const Graph& g : corpus6) {
    MembershipEvaluator eval(g);
    if (!eval.member(parse_class_pair("m3/W")).member) continue;
    if (!eval.member(parse_class_pair("m3/WTW")).member) ++sandwich_violations;
    if (!eval.member(parse_class_pair("m3/TW")).member) ++sandwich_violations;
  }
  if (sandwich_violations) {
    ok = false;
    detail << sandwich_violations << " sandwich violations; ";
  }
  detail << "m3/TW: " << tw.candidates.size() << " and m3/WTW: " << wtw.candidates.size()
         << " minimal non-members at n<=6";
  report(6, "miner ground truth n<=6", ok, detail.str());
}

// ---- criterion 7: graph6 round trips ---------------------------------------

void criterion_graph6(const std::vector<Graph>& corpus7) {
  long mismatches = 0;
  for (const Graph& g : corpus7) {
    std::string line = encode_graph6(g);
    if (!(decode_graph6(line) == g) || encode_graph6(decode_graph6(line)) != line) ++mismatches;
  }
  bool external_ok = false;
  std::string why;
  try {
    auto external = read_graph6_file(std::string(WALKDOM_TEST_DATA) + "/c5_external.g6");
    external_ok =
        external.size() == 1 && is_isomorphic(external[0], catalog_entry("C5").graph);
  } catch (const Error& e) {
    why = e.what();
  }
  std::ostringstream detail;
  detail << corpus7.size() << " round trips, " << mismatches << " mismatches; external C5 "
         << (external_ok ? "decodes" : ("failed " + why));
  report(7, "graph6 byte-exact round trip", mismatches == 0 && external_ok, detail.str());
}

// ---- criterion 8: membership chain -----------------------------------------

void criterion_chain(const std::vector<Graph>& corpus7) {
  const ClassPair chain[] = {parse_class_pair("m3/W"), parse_class_pair("m3/WTW"),
                             parse_class_pair("m3/TW"), parse_class_pair("m3/IP"),
                             parse_class_pair("m3/SP")};
  long violations = 0;
  for (const Graph& g : corpus7) {
    MembershipEvaluator eval(g);
    bool prev = eval.member(chain[0]).member;
    for (int i = 1; i < 5; ++i) {
      bool cur = eval.member(chain[i]).member;
      if (prev && !cur) ++violations;
      prev = cur;
    }
  }
  std::ostringstream detail;
  detail << corpus7.size() << " graphs, " << violations << " violations";
  report(8, "membership chain m3/W..m3/SP", violations == 0, detail.str());
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  auto corpus5 = generate_corpus(5);
  auto corpus6 = generate_corpus(6);
  auto corpus7 = generate_corpus(7);

  criterion_theorems(corpus6, corpus7);
  criterion_certificates();
  criterion_oracle_equivalence(corpus5);
  criterion_inclusions(corpus6);
  criterion_detectors(corpus6, corpus7);
  criterion_miner(corpus6);
  criterion_graph6(corpus7);
  criterion_chain(corpus7);

  std::printf("%d of 8 criteria failed (%.1fs)\n", failures, seconds_since(t0));
  return failures;
}
