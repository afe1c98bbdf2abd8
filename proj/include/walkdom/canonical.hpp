#pragma once

#include <string>
#include <vector>

#include "walkdom/graph.hpp"

namespace walkdom {

/// Canonical form: equal strings exactly when the graphs are isomorphic.
/// Computed by iterated neighborhood refinement with backtracking over
/// refinement-stable cells (exact, not hashed). The returned string is the
/// graph6 encoding of the canonically relabeled graph, so it sorts first by
/// vertex count and decodes back to a representative.
std::string canonical_form(const Graph& g);

/// Relabeling old->new that produces canonical_form(g).
std::vector<int> canonical_labeling(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace walkdom
