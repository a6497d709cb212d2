#pragma once

// Brute-force oracles used by the tests and acceptance suite. Everything
// here is deliberately naive and independent of the solver implementations
// it cross-checks.

#include "bk/graph.hpp"

#include <cstdint>
#include <vector>

namespace bk::oracle {

// Pair (i,j), i<j, at upper-triangle index j(j-1)/2 + i of the mask
// (column-major, the graph6 bit order).
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_graph(const Graph& g);

// Exhaustive over all 2^n subsets.
std::pair<int, std::vector<int>> brute_max_independent_set(const Graph& g);
std::pair<int, std::vector<int>> brute_max_clique(const Graph& g);

// Odometer over all k^n assignments (early exit on the first proper one).
bool brute_colorable(const Graph& g, int k);
int brute_chromatic(const Graph& g);

// Number of isomorphism classes of simple graphs on n vertices, by sieving
// all labeled graphs with all n! permutations. Practical for n <= 7.
long brute_iso_class_count(int n);

// Same sieve restricted to a labeled-graph predicate that is isomorphism
// invariant (e.g. connectivity).
long brute_iso_class_count_if(int n, bool (*pred)(const Graph&));

} // namespace bk::oracle
