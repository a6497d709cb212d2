#pragma once

#include "bk/graph.hpp"

#include <string>
#include <vector>

namespace bk {

struct CanonicalForm {
    std::string graph6;      // graph6 of the relabeled graph; equal iff isomorphic
    std::vector<int> order;  // order[p] = original vertex at canonical position p
};

// Deterministic canonical form via iterated degree refinement plus
// backtracking over the first non-singleton cell. Disconnected graphs are
// assembled from component forms and co-disconnected ones via the
// complement, which keeps the search tiny on the symmetric cases.
// Throws std::invalid_argument for n > 64.
CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace bk
