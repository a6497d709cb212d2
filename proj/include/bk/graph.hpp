#pragma once

#include "bk/bitset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bk {

// Simple undirected graph on vertices 0..n-1, adjacency kept as one bitrow
// per vertex. Immutable after construction: every edit below returns a new
// graph, so graphs can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    // Edgeless graph on n vertices.
    explicit Graph(int n);

    // Throws std::invalid_argument on out-of-range endpoints, self-loops or
    // n outside [0, kMaxVertices]. Duplicate edges collapse.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const;
    int max_degree() const;
    long long edge_count() const;

    VertexSet vertices() const { return VertexSet::full(n_); }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;

    friend Graph complement(const Graph&);
    friend Graph induced_subgraph(const Graph&, const VertexSet&);
    friend Graph with_added_vertex(const Graph&, const VertexSet&);
    friend Graph apply_labeling(const Graph&, const std::vector<int>&);
};

Graph complement(const Graph& g);

// Subgraph on the vertices of s, relabeled 0..|s|-1 in ascending order of
// original index.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

Graph delete_vertex(const Graph& g, int v);

// New vertex n adjacent to all previous vertices.
Graph add_apex(const Graph& g);

// New vertex n with the given neighborhood.
Graph with_added_vertex(const Graph& g, const VertexSet& nbrs);

// Relabel: position p of the result is vertex order[p] of g.
Graph apply_labeling(const Graph& g, const std::vector<int>& order);

bool is_connected(const Graph& g);

// Vertices reachable from v (v included).
VertexSet component_of(const Graph& g, int v);

} // namespace bk
