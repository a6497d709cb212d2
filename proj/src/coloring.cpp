#include "bk/coloring.hpp"

#include "bk/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace bk {

bool is_proper(const Graph& g, const Coloring& c)
{
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (!c.assigned(v))
            continue;
        for (int u = g.neighbors(v).next(v); u != -1; u = g.neighbors(v).next(u))
            if (c.at(u) == c.at(v))
                return false;
    }
    return true;
}

bool is_proper_on_deleted(const Graph& g, const Coloring& c, int u)
{
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (v == u || !c.assigned(v))
            continue;
        for (int w = g.neighbors(v).next(v); w != -1; w = g.neighbors(v).next(w))
            if (w != u && c.at(w) == c.at(v))
                return false;
    }
    return true;
}

std::vector<VertexSet> color_classes(const Graph& g, const Coloring& c)
{
    std::vector<VertexSet> classes(c.palette + 1);
    for (int v = 0; v < g.vertex_count(); ++v)
        classes[c.at(v)].set(v);
    return classes;
}

namespace {

    // Colors used on the neighbors of v, as a bitmask over 1..k (bit i-1).
    std::uint64_t neighbor_color_mask(const Graph& g, const std::vector<int>& color, int v)
    {
        std::uint64_t mask = 0;
        g.neighbors(v).for_each([&](int u) {
            if (color[u] != kUnassigned)
                mask |= 1ull << (color[u] - 1);
        });
        return mask;
    }

} // namespace

Coloring greedy_color(const Graph& g, const std::vector<int>& order)
{
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order is not a permutation: wrong length");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("order is not a permutation");
        seen[v] = 1;
    }

    Coloring c(n, 0);
    for (int v : order) {
        int pick = 1;
        // n <= 512 so colors fit comfortably in a small scan.
        std::vector<char> used(n + 2, 0);
        g.neighbors(v).for_each([&](int u) {
            if (c.color[u] != kUnassigned)
                used[c.color[u]] = 1;
        });
        while (used[pick])
            ++pick;
        c.color[v] = pick;
        c.palette = std::max(c.palette, pick);
    }
    return c;
}

Coloring dsatur_color(const Graph& g)
{
    const int n = g.vertex_count();
    Coloring c(n, 0);
    std::vector<VertexSet> seen_colors(n); // distinct neighbor colors, as sets over color-1
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (c.assigned(v))
                continue;
            const int sat = seen_colors[v].count();
            const int deg = g.neighbors(v).count();
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int pick = 1;
        while (seen_colors[best].test(pick - 1))
            ++pick;
        c.color[best] = pick;
        c.palette = std::max(c.palette, pick);
        g.neighbors(best).for_each([&](int u) { seen_colors[u].set(pick - 1); });
    }
    return c;
}

namespace {

    struct ChiSearch {
        const Graph& g;
        int n;
        int best;
        int floor; // chi >= floor (clique bound)
        std::vector<int> assign;
        std::vector<int> best_assign;

        void rec(int max_used)
        {
            if (best == floor)
                return;
            int v = -1;
            for (int i = 0; i < n; ++i)
                if (assign[i] == kUnassigned) {
                    v = i;
                    break;
                }
            if (v == -1) {
                best = max_used;
                best_assign = assign;
                return;
            }
            const std::uint64_t used = neighbor_color_mask(g, assign, v);
            const int cap = std::min(max_used + 1, best - 1);
            for (int col = 1; col <= cap; ++col) {
                if (used >> (col - 1) & 1)
                    continue;
                assign[v] = col;
                rec(std::max(max_used, col));
                assign[v] = kUnassigned;
                if (best == floor)
                    return;
            }
        }
    };

} // namespace

std::pair<int, Coloring> chromatic_number(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > kChromaticScope)
        throw std::invalid_argument("exact chromatic solver scope exceeded: n="
            + std::to_string(n) + " > " + std::to_string(kChromaticScope));
    if (n == 0)
        return { 0, Coloring(0, 0) };

    const auto [omega, clique] = clique_number(g);
    Coloring ub = dsatur_color(g);
    if (ub.max_color_used() == omega)
        return { omega, ub };

    ChiSearch s{ g, n, ub.max_color_used(), omega, std::vector<int>(n, kUnassigned), ub.color };
    // Pin the maximum clique to colors 1..omega: every coloring can be
    // renamed to match, and the symmetry break cuts the search hard.
    int next = 1;
    clique.for_each([&](int v) { s.assign[v] = next++; });
    s.rec(omega);

    Coloring out(n, s.best);
    out.color = s.best_assign;
    return { s.best, out };
}

namespace {

    // Color the vertices of sub (all, if precolored entries are kUnassigned)
    // in decreasing BFS-distance from root, least available color first.
    // Every non-root vertex still has its tree parent uncolored when its turn
    // comes, so budget colors always suffice when deg(root) < budget.
    void reverse_bfs_greedy(const Graph& g, const VertexSet& active, int root, int budget,
        std::vector<int>& color)
    {
        std::vector<int> dist(g.vertex_count(), -1);
        std::vector<int> order;
        dist[root] = 0;
        order.push_back(root);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const int v = order[head];
            (g.neighbors(v) & active).for_each([&](int u) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    order.push_back(u);
                }
            });
        }
        std::stable_sort(order.begin(), order.end(),
            [&](int a, int b) { return dist[a] > dist[b]; });
        for (int v : order) {
            std::uint64_t used = 0;
            g.neighbors(v).for_each([&](int u) {
                if (color[u] != kUnassigned && color[u] <= 64)
                    used |= 1ull << (color[u] - 1);
            });
            int pick = 1;
            while (pick <= budget && (used >> (pick - 1) & 1))
                ++pick;
            if (pick > budget)
                throw std::logic_error("brooks greedy ran out of colors");
            color[v] = pick;
        }
    }

} // namespace

Coloring brooks_color(const Graph& g)
{
    const int n = g.vertex_count();
    if (!is_connected(g))
        throw std::invalid_argument("brooks_color: graph is disconnected");
    if (is_complete(g))
        throw std::invalid_argument("brooks_color: graph is complete");
    if (is_odd_cycle(g))
        throw std::invalid_argument("brooks_color: graph is an odd cycle");

    const int delta = g.max_degree();
    Coloring c(n, 0);

    if (delta <= 2) {
        // Connected, not complete, not an odd cycle: a path or an even cycle.
        std::vector<int> dist(n, -1);
        std::vector<int> queue{ 0 };
        dist[0] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            g.neighbors(v).for_each([&](int u) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            });
        }
        for (int v = 0; v < n; ++v)
            c.color[v] = 1 + dist[v] % 2;
        c.palette = c.max_color_used();
        return c;
    }

    // Some vertex of degree < delta: greedy over a reverse spanning-tree
    // order from it.
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < delta) {
            reverse_bfs_greedy(g, g.vertices(), v, delta, c.color);
            c.palette = c.max_color_used();
            return c;
        }

    // delta-regular. Cut vertex: color each component-plus-cut piece on its
    // own (the cut vertex has small degree inside the piece), then align the
    // pieces on the cut vertex's color.
    for (int u = 0; u < n; ++u) {
        VertexSet rest = g.vertices();
        rest.reset(u);
        // Peel the components of G - u in original labels.
        VertexSet remaining = rest;
        std::vector<VertexSet> comps;
        while (!remaining.empty()) {
            const int s = remaining.lowest();
            VertexSet reach = VertexSet::single(s);
            VertexSet frontier = reach;
            while (!frontier.empty()) {
                VertexSet grow;
                frontier.for_each([&](int x) { grow |= g.neighbors(x) & rest; });
                frontier = grow.minus(reach);
                reach |= frontier;
            }
            comps.push_back(reach);
            remaining = remaining.minus(reach);
        }
        if (comps.size() < 2)
            continue;
        for (const VertexSet& piece_verts : comps) {
            std::vector<int> piece_color(n, kUnassigned);
            VertexSet active = piece_verts;
            active.set(u);
            reverse_bfs_greedy(g, active, u, delta, piece_color);
            // Align so u gets color 1 everywhere.
            const int cu = piece_color[u];
            active.for_each([&](int v) {
                if (piece_color[v] == cu)
                    c.color[v] = 1;
                else if (piece_color[v] == 1)
                    c.color[v] = cu;
                else
                    c.color[v] = piece_color[v];
            });
        }
        c.palette = c.max_color_used();
        return c;
    }

    // 2-connected delta-regular non-complete graph with delta >= 3: pick b
    // with two nonadjacent neighbors a, c whose removal keeps the graph
    // connected, precolor a and c alike, then greedy towards b.
    for (int b = 0; b < n; ++b) {
        const std::vector<int> nb = g.neighbors(b).to_vector();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const int a = nb[i], d = nb[j];
                if (g.has_edge(a, d))
                    continue;
                VertexSet rest = g.vertices();
                rest.reset(a);
                rest.reset(d);
                const Graph h = induced_subgraph(g, rest);
                if (!is_connected(h))
                    continue;
                c.color[a] = 1;
                c.color[d] = 1;
                reverse_bfs_greedy(g, rest, b, delta, c.color);
                c.palette = c.max_color_used();
                return c;
            }
    }
    throw std::logic_error("brooks_color: no valid start triple found");
}

} // namespace bk
