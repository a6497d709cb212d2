#pragma once

#include "bk/graph.hpp"

#include <functional>
#include <vector>

namespace bk {

inline constexpr int kEnumerationScope = 12;

using GraphPredicate = std::function<bool(const Graph&)>;
using GraphSink = std::function<void(const Graph&)>;

// One representative per isomorphism class on n vertices whose every
// induced subgraph along the construction passes prune (prune must be
// hereditary for the enumeration to be exhaustive over the class).
// Canonical augmentation: a child produced by attaching a new vertex is kept
// iff deleting the child's canonical last vertex gives back the parent's
// class; per-parent duplicates are removed by canonical form. Throws for
// n > kEnumerationScope.
void enumerate_graphs(int n, const GraphPredicate& prune, const GraphSink& yield);

// alpha(g) <= bound, as a hereditary pruning predicate.
GraphPredicate alpha_at_most(int bound);

// Convenience: collect into a vector; alpha_max < 0 means no pruning.
std::vector<Graph> enumerate_all(int n, int alpha_max = -1);

} // namespace bk
