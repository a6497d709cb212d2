#pragma once

// Named graphs the tests keep reaching for.

#include "bk/graph.hpp"

namespace bk::testgraphs {

inline Graph complete(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

inline Graph empty(int n) { return Graph::from_edges(n, {}); }

inline Graph cycle(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph path(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite(int a, int b)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

inline Graph petersen()
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer cycle
        edges.emplace_back(i, i + 5);               // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

} // namespace bk::testgraphs
