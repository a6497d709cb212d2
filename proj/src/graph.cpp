#include "bk/graph.hpp"

#include <stdexcept>
#include <string>

namespace bk {

Graph::Graph(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    n_ = n;
    adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    Graph g(n);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a)
                + "," + std::to_string(b) + ") with n=" + std::to_string(n));
        if (a == b)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        g.adj_[a].set(b);
        g.adj_[b].set(a);
    }
    return g;
}

int Graph::degree(int v) const
{
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    return adj_[v].count();
}

int Graph::max_degree() const
{
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, adj_[v].count());
    return d;
}

long long Graph::edge_count() const
{
    long long twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += adj_[v].count();
    return twice / 2;
}

Graph complement(const Graph& g)
{
    Graph c(g.n_);
    const VertexSet all = VertexSet::full(g.n_);
    for (int v = 0; v < g.n_; ++v) {
        c.adj_[v] = all.minus(g.adj_[v]);
        c.adj_[v].reset(v);
    }
    return c;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    const std::vector<int> keep = s.to_vector();
    Graph h(static_cast<int>(keep.size()));
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(keep.size()); ++j)
            if (g.has_edge(keep[i], keep[j])) {
                h.adj_[i].set(j);
                h.adj_[j].set(i);
            }
    return h;
}

Graph delete_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    VertexSet s = g.vertices();
    s.reset(v);
    return induced_subgraph(g, s);
}

Graph add_apex(const Graph& g)
{
    return with_added_vertex(g, g.vertices());
}

Graph with_added_vertex(const Graph& g, const VertexSet& nbrs)
{
    const int n = g.n_;
    Graph h(n + 1);
    for (int v = 0; v < n; ++v)
        h.adj_[v] = g.adj_[v];
    nbrs.for_each([&](int v) {
        h.adj_[v].set(n);
        h.adj_[n].set(v);
    });
    return h;
}

Graph apply_labeling(const Graph& g, const std::vector<int>& order)
{
    const int n = g.n_;
    Graph h(n);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (g.has_edge(order[p], order[q])) {
                h.adj_[p].set(q);
                h.adj_[q].set(p);
            }
    return h;
}

VertexSet component_of(const Graph& g, int v)
{
    VertexSet comp = VertexSet::single(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet grow;
        frontier.for_each([&](int u) { grow |= g.neighbors(u); });
        frontier = grow.minus(comp);
        comp |= frontier;
    }
    return comp;
}

bool is_connected(const Graph& g)
{
    if (g.vertex_count() <= 1)
        return true;
    return component_of(g, 0).count() == g.vertex_count();
}

} // namespace bk
