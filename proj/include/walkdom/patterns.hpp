#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkdom/graph.hpp"

namespace walkdom {

/// One named graph from the built-in catalog, with its conventional
/// x-labels.
struct PatternEntry {
  std::string name;
  Graph graph;
};

/// The twelve catalog graphs: P4 (the path with four edges, named for its
/// length; five vertices), co-gemK2, C5, D (domino), F3, A, X96, house, X5,
/// co-X58, Antenna, F. Holes are an infinite family and are handled by
/// has_hole, not a catalog entry.
const std::vector<PatternEntry>& catalog();
const PatternEntry& catalog_entry(const std::string& name);  // UnknownPatternName

/// Embedding of `pattern` as an induced subgraph of `host`: pattern vertex
/// i maps to embedding[i]. Plain backtracking with degree pruning; the
/// first embedding in lexicographic search order is returned.
std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern);

/// Witness for a chordless cycle of length at least five, or nullopt.
/// The witness is the lexicographically least induced cycle, anchored at
/// its smallest vertex.
std::optional<std::vector<int>> has_hole(const Graph& g);

/// An ordered forbidden set: named catalog patterns and/or the hole family.
struct ForbiddenItem {
  std::string name;
  bool hole_family = false;
  std::optional<Graph> pattern;  // absent for the hole family
};

struct ForbiddenSet {
  std::vector<ForbiddenItem> items;
};

/// Grammar: comma list of catalog names plus "hole"; alias "HHD" expands to
/// house,hole,D. Duplicate names collapse.
ForbiddenSet parse_forbidden(const std::string& spec);
std::string to_string(const ForbiddenSet& fs);

struct FreeResult {
  bool free = true;
  std::string offender;        // pattern name or "hole"
  std::vector<int> embedding;  // pattern embedding, or the hole cycle
};

/// True iff no forbidden item occurs as an induced subgraph. Items are
/// checked in set order; the first offender is reported.
FreeResult is_free(const Graph& g, const ForbiddenSet& fs);

}  // namespace walkdom
