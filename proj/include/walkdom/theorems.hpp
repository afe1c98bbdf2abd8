#pragma once

#include <string>
#include <vector>

#include "walkdom/domination.hpp"
#include "walkdom/patterns.hpp"

namespace walkdom {

/// A registered characterization: one or more class pairs asserted equal to
/// the same forbidden-subgraph class.
struct TheoremSpec {
  std::string id;  // "T1".."T8"
  std::string statement;
  std::vector<ClassPair> class_pairs;
  ForbiddenSet forbidden;
};

/// The eight built-in characterizations the verifier cross-validates.
const std::vector<TheoremSpec>& registry();
const TheoremSpec& registry_entry(const std::string& id);

/// Every connected graph on <= max_n vertices, one per isomorphism class,
/// each in canonical labeling, ordered by vertex count then canonical form.
/// Built-in generator supports max_n <= 8; larger corpora come from files.
std::vector<Graph> generate_corpus(int max_n);

struct Disagreement {
  std::string graph6;
  ClassPair pair;
  bool definition_member = false;
  bool forbidden_free = false;
  std::optional<Certificate> certificate;  // when the definition side fails
  std::string offender;                    // when the forbidden side fails
  std::vector<int> embedding;
};

struct Report {
  std::string theorem_id;
  std::string statement;
  std::string corpus;
  int graphs_checked = 0;
  std::vector<Disagreement> disagreements;
  double seconds = 0.0;
};

/// Compares definition-based membership with forbidden-subgraph membership
/// for every graph of the corpus. Definition side runs with the
/// minimal-vs-maximal optimization on; every negative verdict is re-checked
/// exhaustively and its certificate replayed before being reported.
/// Deterministic output for any job count.
Report verify_theorem(const TheoremSpec& spec, const std::vector<Graph>& corpus, int jobs = 1);
std::vector<Report> verify_registry(const std::vector<Graph>& corpus, int jobs = 1);

std::string report_table(const std::vector<Report>& reports);
std::string reports_to_json(const std::vector<Report>& reports);

/// Sequence-level inclusion checks between the walk classes, asserted over
/// every walk of length <= 2n (or the given bound) for every non-adjacent
/// pair: SP, m3, l2, l3 are induced paths; l2-paths are l3-paths and
/// shortest paths; induced paths are paths and toll walks; toll walks are
/// weakly toll walks; paths and weakly toll walks are walks.
struct InclusionViolation {
  int u = -1, v = -1;
  std::vector<int> seq;
  WalkClass member_of = WalkClass::W;
  WalkClass not_in = WalkClass::W;
};

std::vector<InclusionViolation> check_walk_class_inclusions(const Graph& g, int bound = -1);

}  // namespace walkdom
