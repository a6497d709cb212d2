#pragma once

#include "bk/graph.hpp"

#include <vector>

namespace bk {

// Colors are 1-based (the palette {1, ..., k}); 0 marks an uncolored vertex.
inline constexpr int kUnassigned = 0;

// Exact chromatic search is restricted to this many vertices.
inline constexpr int kChromaticScope = 64;

struct Coloring {
    int palette = 0;        // k: number of colors available
    std::vector<int> color; // per vertex, 0 = unassigned

    Coloring() = default;
    Coloring(int n, int k)
        : palette(k)
        , color(n, kUnassigned)
    {
    }

    int at(int v) const { return color[v]; }
    bool assigned(int v) const { return color[v] != kUnassigned; }

    bool total() const
    {
        for (int c : color)
            if (c == kUnassigned)
                return false;
        return true;
    }

    int max_color_used() const
    {
        int m = 0;
        for (int c : color)
            m = std::max(m, c);
        return m;
    }

    // Same assignment viewed against a (usually wider) palette.
    Coloring with_palette(int k) const
    {
        Coloring c = *this;
        c.palette = k;
        return c;
    }

    bool operator==(const Coloring&) const = default;
};

// No edge joins two equal assigned colors.
bool is_proper(const Graph& g, const Coloring& c);

// Properness of c restricted to G - u (edges at u ignored).
bool is_proper_on_deleted(const Graph& g, const Coloring& c, int u);

// classes[i] = vertices colored i, for i in 1..palette; classes[0] holds the
// unassigned vertices.
std::vector<VertexSet> color_classes(const Graph& g, const Coloring& c);

// Least available color along the given vertex order. Throws if order is not
// a permutation of the vertices.
Coloring greedy_color(const Graph& g, const std::vector<int>& order);

// Max saturation first; ties by higher degree, then lower index.
Coloring dsatur_color(const Graph& g);

// Exact chi with witness. Clique lower bound, DSATUR upper bound, closed by
// branch-and-bound on the lowest-index uncolored vertex. Throws on
// n > kChromaticScope.
std::pair<int, Coloring> chromatic_number(const Graph& g);

// Constructive Brooks coloring: at most max_degree(g) colors for a connected
// graph that is neither complete nor an odd cycle. Throws (with the failing
// case named) when the preconditions do not hold.
Coloring brooks_color(const Graph& g);

} // namespace bk
