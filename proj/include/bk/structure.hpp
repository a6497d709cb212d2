#pragma once

#include "bk/graph.hpp"

namespace bk {

struct StructureSummary {
    int alpha = 0;
    int omega = 0;
    bool is_4k1_free = true;
    VertexSet witness_independent_set;
    VertexSet witness_clique;
};

// Exact maximum independent set (size, lexicographically least witness).
std::pair<int, VertexSet> independence_number(const Graph& g);

// Exact maximum clique (size, lexicographically least witness).
std::pair<int, VertexSet> clique_number(const Graph& g);

// True iff g contains a clique on k vertices. Early-exit search.
bool has_clique_of_size(const Graph& g, int k);

// alpha(g) <= 3, i.e. no induced 4K1.
bool is_4k1_free(const Graph& g);

bool is_complete(const Graph& g);
bool is_odd_cycle(const Graph& g);

StructureSummary analyze_structure(const Graph& g);

} // namespace bk
