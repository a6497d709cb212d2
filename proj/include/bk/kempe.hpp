#pragma once

#include "bk/coloring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bk {

// Classification of the colors on N(u): a color is unique if exactly one
// neighbor carries it, repeated if two or more do, missing otherwise.
struct PaletteProfile {
    int center = -1;
    int palette = 0;
    std::vector<int> unique_vertex;         // per color 1..palette, -1 = none
    std::vector<VertexSet> repeat_vertices; // per color 1..palette

    bool is_unique(int color) const { return unique_vertex[color] != -1; }
    bool is_repeat(int color) const { return !repeat_vertices[color].empty(); }
    bool is_missing(int color) const { return !is_unique(color) && !is_repeat(color); }

    std::vector<int> unique_colors() const;
    std::vector<int> repeat_colors() const;
    std::vector<int> missing_colors() const;

    // The structure forced at a degree-(palette+1) vertex whose coloring
    // cannot be extended directly: palette-1 unique colors plus one color on
    // exactly two neighbors, nothing missing.
    bool launch_configuration(int center_degree) const;
};

// Throws if the coloring is improper on G - u or a neighbor of u is
// uncolored. u itself may be uncolored.
PaletteProfile palette_profile(const Graph& g, const Coloring& c, int u);

// One maximal connected component of the subgraph induced by two color
// classes.
struct KempeChain {
    int color_a = 0; // normalized: color_a < color_b
    int color_b = 0;
    VertexSet vertices;
};

// The chain through v for colors {i, j}. Throws unless v is colored i or j
// and c is proper.
KempeChain kempe_component(const Graph& g, const Coloring& c, int v, int i, int j);

// Exchange the two colors on the chain. Throws if the chain is stale (is no
// longer a maximal component of c).
Coloring kempe_swap(const Graph& g, const Coloring& c, const KempeChain& chain);

// Recolor v (a neighbor of u) to the least color absent from N(v); nullopt
// when every other color appears there.
std::optional<Coloring> tactic_free_color(const Graph& g, const Coloring& c, int u, int v);

struct TacticStep {
    enum class Kind { Assign, FreeRecolor, KempeSwap };
    Kind kind = Kind::Assign;
    VertexSet vertices;     // single vertex for assign/recolor, the chain for swaps
    int color_from = 0;     // swap: the {from, to} pair is exchanged
    int color_to = 0;

    std::string to_line() const;
};

struct TacticTrace {
    std::vector<TacticStep> steps;
    int success_color = 0; // color given to the center, 0 = FAILED

    bool failed() const { return success_color == 0; }
    std::vector<std::string> to_lines() const;
};

// Apply the steps to a copy of initial; the trace invariant is that this
// reproduces the coloring the producing call returned.
Coloring replay_trace(const Graph& g, Coloring initial, const TacticTrace& trace);

struct TacticOptions {
    int depth = 4;         // cascade move budget
    long max_nodes = 2500; // cascade expansion cap per attempt
};

struct CascadeResult {
    bool moved = false;
    Coloring coloring;
    std::vector<TacticStep> steps;
    long nodes = 0;
};

// Bounded-depth deterministic search over free-recolor and Kempe-swap moves
// seeded within distance 2 of u, succeeding once some palette color is absent
// from N(u). Returns the first success in move order; NO_MOVE is just
// moved = false.
CascadeResult tactic_chain_cascade(const Graph& g, const Coloring& c, int u,
    const TacticOptions& opts = {});

struct ExtensionResult {
    bool success = false;
    Coloring coloring;
    TacticTrace trace;
    long cascade_nodes = 0;
    bool used_cascade = false;
};

// Extend a proper total k-coloring of G - u to u: direct assignment, then
// single free recolors over N(u), then the cascade. FAILED is a value, not
// an error; the trace always records what happened.
ExtensionResult extend_coloring(const Graph& g, int u, const Coloring& c, int k,
    const TacticOptions& opts = {});

struct LevelTrace {
    int center = -1;
    int palette = 0;
    TacticTrace trace;
};

struct BkColorStats {
    int extensions = 0;
    int direct = 0;   // phase-1 assignments
    int tactic = 0;   // phase-2/3 successes
    int fallback = 0; // exact solver after FAILED
    long cascade_nodes = 0;
    int launch_checks = 0;     // failed extensions audited for the forced palette shape
    int launch_violations = 0; // should stay 0
};

struct BkColorResult {
    Coloring coloring;
    int bound = 0; // max{Delta-1, omega}
    bool within_bound = false;
    BkColorStats stats;
    std::vector<LevelTrace> traces;
};

// Color a 4K1-free graph with Delta >= 9 by the minimality recursion: strip
// a maximum-degree vertex, color the rest (Brooks / exact base cases), then
// extend by tactics with the exact solver as fallback. Throws when the
// preconditions fail; a bound violation is reported, not thrown.
BkColorResult bk_color(const Graph& g, const TacticOptions& opts = {});

} // namespace bk
