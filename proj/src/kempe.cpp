#include "bk/kempe.hpp"

#include "bk/canonical.hpp"
#include "bk/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bk {

namespace {

    void require_vertex(const Graph& g, int v, const char* what)
    {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument(std::string(what) + " out of range: " + std::to_string(v));
    }

    // Colors present on assigned vertices of set, as bits over color-1.
    std::uint64_t colors_on(const Coloring& c, const VertexSet& set)
    {
        std::uint64_t mask = 0;
        set.for_each([&](int v) {
            if (c.assigned(v))
                mask |= 1ull << (c.at(v) - 1);
        });
        return mask;
    }

    int lowest_missing_color(std::uint64_t present, int k)
    {
        for (int r = 1; r <= k; ++r)
            if (!(present >> (r - 1) & 1))
                return r;
        return 0;
    }

} // namespace

std::vector<int> PaletteProfile::unique_colors() const
{
    std::vector<int> out;
    for (int i = 1; i <= palette; ++i)
        if (is_unique(i))
            out.push_back(i);
    return out;
}

std::vector<int> PaletteProfile::repeat_colors() const
{
    std::vector<int> out;
    for (int i = 1; i <= palette; ++i)
        if (is_repeat(i))
            out.push_back(i);
    return out;
}

std::vector<int> PaletteProfile::missing_colors() const
{
    std::vector<int> out;
    for (int i = 1; i <= palette; ++i)
        if (is_missing(i))
            out.push_back(i);
    return out;
}

bool PaletteProfile::launch_configuration(int center_degree) const
{
    if (center_degree != palette + 1)
        return false;
    int uniques = 0, pairs = 0;
    for (int i = 1; i <= palette; ++i) {
        if (is_missing(i))
            return false;
        if (is_unique(i))
            ++uniques;
        else if (repeat_vertices[i].count() == 2)
            ++pairs;
        else
            return false;
    }
    return uniques == palette - 1 && pairs == 1;
}

PaletteProfile palette_profile(const Graph& g, const Coloring& c, int u)
{
    require_vertex(g, u, "center");
    if (!is_proper_on_deleted(g, c, u))
        throw std::invalid_argument("palette_profile: coloring improper on G - u");

    PaletteProfile p;
    p.center = u;
    p.palette = c.palette;
    p.unique_vertex.assign(p.palette + 1, -1);
    p.repeat_vertices.assign(p.palette + 1, VertexSet{});

    std::vector<int> count(p.palette + 1, 0);
    std::vector<int> first(p.palette + 1, -1);
    bool bad = false;
    int bad_v = -1;
    g.neighbors(u).for_each([&](int v) {
        const int col = c.at(v);
        if (col == kUnassigned || col > p.palette) {
            bad = true;
            bad_v = v;
            return;
        }
        if (++count[col] == 1)
            first[col] = v;
        else
            p.repeat_vertices[col].set(v);
    });
    if (bad)
        throw std::invalid_argument("palette_profile: neighbor " + std::to_string(bad_v)
            + " of the center is uncolored or out of palette");
    for (int col = 1; col <= p.palette; ++col) {
        if (count[col] == 1)
            p.unique_vertex[col] = first[col];
        else if (count[col] >= 2)
            p.repeat_vertices[col].set(first[col]);
    }
    return p;
}

KempeChain kempe_component(const Graph& g, const Coloring& c, int v, int i, int j)
{
    require_vertex(g, v, "vertex");
    if (i == j || i < 1 || j < 1 || i > c.palette || j > c.palette)
        throw std::invalid_argument("kempe_component: invalid color pair");
    if (c.at(v) != i && c.at(v) != j)
        throw std::invalid_argument("kempe_component: vertex " + std::to_string(v)
            + " is not colored " + std::to_string(i) + " or " + std::to_string(j));
    if (!is_proper(g, c))
        throw std::invalid_argument("kempe_component: improper coloring");

    VertexSet both;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (c.at(w) == i || c.at(w) == j)
            both.set(w);

    VertexSet chain = VertexSet::single(v);
    VertexSet frontier = chain;
    while (!frontier.empty()) {
        VertexSet grow;
        frontier.for_each([&](int w) { grow |= g.neighbors(w) & both; });
        frontier = grow.minus(chain);
        chain |= frontier;
    }

    KempeChain k;
    k.color_a = std::min(i, j);
    k.color_b = std::max(i, j);
    k.vertices = chain;
    return k;
}

Coloring kempe_swap(const Graph& g, const Coloring& c, const KempeChain& chain)
{
    if (chain.vertices.empty())
        throw std::invalid_argument("kempe_swap: empty chain");
    const int seed = chain.vertices.lowest();
    if (c.at(seed) != chain.color_a && c.at(seed) != chain.color_b)
        throw std::invalid_argument("kempe_swap: stale chain (seed recolored)");
    const KempeChain now = kempe_component(g, c, seed, chain.color_a, chain.color_b);
    if (!(now.vertices == chain.vertices))
        throw std::invalid_argument("kempe_swap: stale chain (component changed)");

    Coloring out = c;
    chain.vertices.for_each([&](int v) {
        out.color[v] = c.at(v) == chain.color_a ? chain.color_b : chain.color_a;
    });
    return out;
}

std::optional<Coloring> tactic_free_color(const Graph& g, const Coloring& c, int u, int v)
{
    require_vertex(g, u, "center");
    require_vertex(g, v, "vertex");
    if (c.palette > 64)
        throw std::invalid_argument("tactic_free_color: palette wider than 64 colors");
    if (!g.has_edge(u, v))
        throw std::invalid_argument("tactic_free_color: vertex not adjacent to center");
    if (!c.assigned(v))
        throw std::invalid_argument("tactic_free_color: vertex uncolored");
    if (!is_proper_on_deleted(g, c, u))
        throw std::invalid_argument("tactic_free_color: coloring improper on G - u");

    const std::uint64_t present = colors_on(c, g.neighbors(v));
    for (int r = 1; r <= c.palette; ++r) {
        if (r == c.at(v) || (present >> (r - 1) & 1))
            continue;
        Coloring out = c;
        out.color[v] = r;
        return out;
    }
    return std::nullopt;
}

std::string TacticStep::to_line() const
{
    std::string verts;
    vertices.for_each([&](int v) {
        if (!verts.empty())
            verts += ',';
        verts += std::to_string(v);
    });
    switch (kind) {
    case Kind::Assign:
        return "assign v=" + verts + " color=" + std::to_string(color_to);
    case Kind::FreeRecolor:
        return "free_recolor v=" + verts + " from=" + std::to_string(color_from)
            + " to=" + std::to_string(color_to);
    case Kind::KempeSwap:
        return "kempe_swap colors=" + std::to_string(color_from) + ","
            + std::to_string(color_to) + " vertices=" + verts;
    }
    return {};
}

std::vector<std::string> TacticTrace::to_lines() const
{
    std::vector<std::string> lines;
    lines.reserve(steps.size() + 1);
    for (const auto& s : steps)
        lines.push_back(s.to_line());
    lines.push_back(failed() ? "outcome failed"
                             : "outcome success color=" + std::to_string(success_color));
    return lines;
}

Coloring replay_trace(const Graph& g, Coloring initial, const TacticTrace& trace)
{
    (void)g;
    for (const auto& s : trace.steps) {
        switch (s.kind) {
        case TacticStep::Kind::Assign:
        case TacticStep::Kind::FreeRecolor:
            s.vertices.for_each([&](int v) { initial.color[v] = s.color_to; });
            break;
        case TacticStep::Kind::KempeSwap:
            s.vertices.for_each([&](int v) {
                if (initial.color[v] == s.color_from)
                    initial.color[v] = s.color_to;
                else if (initial.color[v] == s.color_to)
                    initial.color[v] = s.color_from;
            });
            break;
        }
    }
    return initial;
}

namespace {

    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const
        {
            std::size_t h = 0xcbf29ce484222325ull;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 0x100000001b3ull;
            }
            return h;
        }
    };

    struct Cascade {
        const Graph& g;
        int u;
        int k;
        const TacticOptions& opts;
        std::vector<int> cand; // colored vertices within distance 2 of u
        std::unordered_set<std::vector<int>, VecHash> seen;
        long nodes = 0;
        std::vector<TacticStep> path;

        bool target_free(const Coloring& c) const
        {
            return lowest_missing_color(colors_on(c, g.neighbors(u)), k) != 0;
        }

        bool dfs(const Coloring& c, int depth)
        {
            ++nodes;
            if (target_free(c))
                return true;
            if (depth == opts.depth || nodes >= opts.max_nodes)
                return false;

            // Free recolors first, then swaps; both by vertex then color.
            for (int v : cand) {
                const int cv = c.at(v);
                const std::uint64_t present = colors_on(c, g.neighbors(v));
                for (int r = 1; r <= k; ++r) {
                    if (r == cv || (present >> (r - 1) & 1))
                        continue;
                    Coloring next = c;
                    next.color[v] = r;
                    if (!seen.insert(next.color).second)
                        continue;
                    TacticStep step;
                    step.kind = TacticStep::Kind::FreeRecolor;
                    step.vertices = VertexSet::single(v);
                    step.color_from = cv;
                    step.color_to = r;
                    path.push_back(step);
                    if (dfs(next, depth + 1))
                        return true;
                    path.pop_back();
                    if (nodes >= opts.max_nodes)
                        return false;
                }
            }

            const std::vector<VertexSet> classes = color_classes(g, c);
            for (int v : cand) {
                const int cv = c.at(v);
                for (int j = 1; j <= k; ++j) {
                    if (j == cv)
                        continue;
                    // Chain through v in colors {cv, j}, grown over bitsets.
                    const VertexSet both = classes[cv] | classes[j];
                    VertexSet chain = VertexSet::single(v);
                    VertexSet frontier = chain;
                    while (!frontier.empty()) {
                        VertexSet grow;
                        frontier.for_each([&](int w) { grow |= g.neighbors(w) & both; });
                        frontier = grow.minus(chain);
                        chain |= frontier;
                    }
                    Coloring next = c;
                    chain.for_each([&](int w) {
                        next.color[w] = next.color[w] == cv ? j : cv;
                    });
                    if (!seen.insert(next.color).second)
                        continue;
                    TacticStep step;
                    step.kind = TacticStep::Kind::KempeSwap;
                    step.vertices = chain;
                    step.color_from = std::min(cv, j);
                    step.color_to = std::max(cv, j);
                    path.push_back(step);
                    if (dfs(next, depth + 1))
                        return true;
                    path.pop_back();
                    if (nodes >= opts.max_nodes)
                        return false;
                }
            }
            return false;
        }
    };

} // namespace

CascadeResult tactic_chain_cascade(const Graph& g, const Coloring& c, int u,
    const TacticOptions& opts)
{
    require_vertex(g, u, "center");
    if (c.palette > 64)
        throw std::invalid_argument("tactic_chain_cascade: palette wider than 64 colors");
    if (!is_proper_on_deleted(g, c, u))
        throw std::invalid_argument("tactic_chain_cascade: coloring improper on G - u");
    if (opts.depth < 1)
        throw std::invalid_argument("tactic_chain_cascade: depth budget must be >= 1");

    Cascade cas{ g, u, c.palette, opts, {}, {}, 0, {} };
    VertexSet near = g.neighbors(u);
    g.neighbors(u).for_each([&](int v) { near |= g.neighbors(v); });
    near.reset(u);
    near.for_each([&](int v) {
        if (c.assigned(v))
            cas.cand.push_back(v);
    });
    cas.seen.insert(c.color);

    CascadeResult res;
    // Re-run the winning path on top of c rather than threading copies out
    // of the DFS.
    if (cas.dfs(c, 0)) {
        res.moved = true;
        TacticTrace t;
        t.steps = cas.path;
        t.success_color = -1; // placeholder; callers assign the center
        res.coloring = replay_trace(g, c, t);
        res.steps = std::move(cas.path);
    } else {
        res.coloring = c;
    }
    res.nodes = cas.nodes;
    return res;
}

ExtensionResult extend_coloring(const Graph& g, int u, const Coloring& c, int k,
    const TacticOptions& opts)
{
    require_vertex(g, u, "center");
    if (k < 1 || k > 64)
        throw std::invalid_argument("extend_coloring: k must be in 1..64");
    if (c.assigned(u))
        throw std::invalid_argument("extend_coloring: center is already colored");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != u && !c.assigned(v))
            throw std::invalid_argument("extend_coloring: coloring not total on G - u");
    if (c.max_color_used() > k)
        throw std::invalid_argument("extend_coloring: coloring uses more than k colors");
    if (!is_proper_on_deleted(g, c, u))
        throw std::invalid_argument("extend_coloring: coloring improper on G - u");

    ExtensionResult res;
    Coloring work = c.with_palette(k);

    const auto finish = [&](Coloring done, int color, std::vector<TacticStep> steps) {
        TacticStep last;
        last.kind = TacticStep::Kind::Assign;
        last.vertices = VertexSet::single(u);
        last.color_from = kUnassigned;
        last.color_to = color;
        steps.push_back(last);
        done.color[u] = color;
        res.success = true;
        res.coloring = std::move(done);
        res.trace.steps = std::move(steps);
        res.trace.success_color = color;
    };

    // (1) a palette color already absent from N(u)
    const int direct = lowest_missing_color(colors_on(work, g.neighbors(u)), k);
    if (direct != 0) {
        finish(std::move(work), direct, {});
        return res;
    }

    // (2) recolor one uniquely-colored neighbor away, freeing its color
    const PaletteProfile prof = palette_profile(g, work, u);
    bool done2 = false;
    g.neighbors(u).for_each([&](int v) {
        if (done2)
            return;
        const int cv = work.at(v);
        if (prof.unique_vertex[cv] != v)
            return; // repeated color: recoloring v frees nothing at u
        const std::uint64_t present = colors_on(work, g.neighbors(v));
        const int r = [&] {
            for (int x = 1; x <= k; ++x)
                if (x != cv && !(present >> (x - 1) & 1))
                    return x;
            return 0;
        }();
        if (r == 0)
            return;
        Coloring next = work;
        next.color[v] = r;
        TacticStep step;
        step.kind = TacticStep::Kind::FreeRecolor;
        step.vertices = VertexSet::single(v);
        step.color_from = cv;
        step.color_to = r;
        finish(std::move(next), cv, { step });
        done2 = true;
    });
    if (done2)
        return res;

    // (3) bounded cascade
    CascadeResult cas = tactic_chain_cascade(g, work, u, opts);
    res.cascade_nodes = cas.nodes;
    if (cas.moved) {
        res.used_cascade = true;
        const int r = lowest_missing_color(colors_on(cas.coloring, g.neighbors(u)), k);
        finish(std::move(cas.coloring), r, std::move(cas.steps));
        return res;
    }

    res.success = false;
    res.coloring = work;
    res.trace.success_color = 0;
    return res;
}

namespace {

    // Coloring of a connected odd cycle: alternate two colors around the
    // cycle, third color on the last vertex.
    Coloring odd_cycle_coloring(const Graph& g)
    {
        const int n = g.vertex_count();
        Coloring c(n, 3);
        int prev = 0;
        int cur = g.neighbors(0).lowest();
        c.color[0] = 1;
        int parity = 0;
        for (int step = 1; step < n; ++step) {
            c.color[cur] = step == n - 1 ? 3 : (parity == 0 ? 2 : 1);
            parity ^= 1;
            const VertexSet nb = g.neighbors(cur);
            int next = -1;
            nb.for_each([&](int w) {
                if (w != prev && next == -1)
                    next = w;
            });
            prev = cur;
            cur = next;
        }
        return c;
    }

    struct BkRecursion {
        const TacticOptions& opts;
        BkColorResult& out;

        Coloring color(const Graph& h)
        {
            const int n = h.vertex_count();
            if (n == 0)
                return Coloring(0, 0);

            if (!is_connected(h)) {
                Coloring merged(n, 0);
                VertexSet remaining = VertexSet::full(n);
                while (!remaining.empty()) {
                    const VertexSet comp = component_of(h, remaining.lowest());
                    const std::vector<int> labels = comp.to_vector();
                    const Coloring sub = color(induced_subgraph(h, comp));
                    for (std::size_t i = 0; i < labels.size(); ++i)
                        merged.color[labels[i]] = sub.at(static_cast<int>(i));
                    merged.palette = std::max(merged.palette, sub.palette);
                    remaining = remaining.minus(comp);
                }
                return merged;
            }
            if (is_complete(h)) {
                Coloring c(n, n);
                for (int v = 0; v < n; ++v)
                    c.color[v] = v + 1;
                return c;
            }
            if (is_odd_cycle(h))
                return odd_cycle_coloring(h);

            const int delta = h.max_degree();
            if (delta < 9)
                return brooks_color(h);

            const int omega = clique_number(h).first;
            if (omega >= delta)
                return chromatic_number(h).second;

            // Minimality step: strip a maximum-degree vertex, color the rest,
            // extend with k = delta - 1 colors.
            const int k = delta - 1;
            int u = 0;
            for (int v = 0; v < n; ++v)
                if (h.degree(v) > h.degree(u))
                    u = v;

            const Coloring sub = color(delete_vertex(h, u));
            if (sub.max_color_used() > k) {
                // A lower level already blew the bound (only possible if the
                // theorem fails there); color this level exactly and let the
                // caller's bound check report it.
                ++out.stats.fallback;
                return chromatic_number(h).second;
            }
            Coloring lifted(n, k);
            for (int v = 0; v < n; ++v)
                if (v != u)
                    lifted.color[v] = sub.at(v < u ? v : v - 1);

            ExtensionResult ext = extend_coloring(h, u, lifted, k, opts);
            ++out.stats.extensions;
            out.stats.cascade_nodes += ext.cascade_nodes;
            out.traces.push_back({ u, k, ext.trace });

            if (ext.success) {
                if (ext.trace.steps.size() == 1)
                    ++out.stats.direct;
                else
                    ++out.stats.tactic;
                // Trace law: replaying the steps must rebuild the coloring.
                if (!(replay_trace(h, lifted, ext.trace) == ext.coloring))
                    throw std::logic_error("bk_color: trace replay mismatch");
                return ext.coloring;
            }

            // The forced shape at a failed extension: k-1 unique colors and
            // one color on exactly two neighbors.
            ++out.stats.launch_checks;
            if (!palette_profile(h, lifted, u).launch_configuration(h.degree(u)))
                ++out.stats.launch_violations;

            ++out.stats.fallback;
            return chromatic_number(h).second;
        }
    };

} // namespace

BkColorResult bk_color(const Graph& g, const TacticOptions& opts)
{
    if (g.vertex_count() > kChromaticScope)
        throw std::invalid_argument("bk_color: exact-solver scope exceeded");
    if (!is_4k1_free(g))
        throw std::invalid_argument("bk_color: graph is not 4K1-free");
    const int delta = g.max_degree();
    if (delta < 9)
        throw std::invalid_argument("bk_color: max degree below 9");

    BkColorResult res;
    res.bound = std::max(delta - 1, clique_number(g).first);

    BkRecursion rec{ opts, res };
    res.coloring = rec.color(g);
    res.coloring.palette = std::max(res.coloring.palette, res.coloring.max_color_used());
    res.within_bound = res.coloring.max_color_used() <= res.bound && is_proper(g, res.coloring)
        && res.coloring.total();
    return res;
}

} // namespace bk
