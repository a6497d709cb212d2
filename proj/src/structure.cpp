#include "bk/structure.hpp"

#include <vector>

namespace bk {

namespace {

    // Branch-and-bound maximum clique with a greedy-coloring bound
    // (Tomita-style). Candidates are colored greedily; a subtree is cut when
    // depth + color bound cannot beat the incumbent. `stop_at` short-circuits
    // the search once a clique of that size is found (used by the alpha <= 3
    // test, where only "is there a 4-clique" matters).
    struct CliqueSearch {
        const Graph& g;
        int best = 0;
        int stop_at;

        explicit CliqueSearch(const Graph& graph, int stop = -1)
            : g(graph)
            , stop_at(stop)
        {
        }

        // Color candidates greedily and order them by color class; returns
        // vertices paired with their 1-based color (the bound).
        void color_sort(const VertexSet& cand, std::vector<std::pair<int, int>>& order) const
        {
            order.clear();
            VertexSet left = cand;
            int color = 0;
            while (!left.empty()) {
                ++color;
                VertexSet cls = left;
                while (!cls.empty()) {
                    const int v = cls.lowest();
                    order.emplace_back(v, color);
                    left.reset(v);
                    cls.reset(v);
                    cls = cls.minus(g.neighbors(v));
                }
            }
        }

        void expand(int depth, const VertexSet& cand)
        {
            std::vector<std::pair<int, int>> order;
            color_sort(cand, order);
            VertexSet rest = cand;
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                if (stop_at > 0 && best >= stop_at)
                    return;
                const auto [v, bound] = *it;
                if (depth + bound <= best)
                    return;
                const VertexSet next = rest & g.neighbors(v);
                if (next.empty()) {
                    if (depth + 1 > best)
                        best = depth + 1;
                } else {
                    expand(depth + 1, next);
                }
                rest.reset(v);
            }
        }

        int run(const VertexSet& cand, int seed_best)
        {
            best = seed_best;
            if (!cand.empty())
                expand(0, cand);
            return best;
        }
    };

    // Largest clique using only vertices of cand.
    int max_clique_size_within(const Graph& g, const VertexSet& cand, int at_least_stop = -1)
    {
        CliqueSearch s(g, at_least_stop);
        return s.run(cand, 0);
    }

} // namespace

bool has_clique_of_size(const Graph& g, int k)
{
    if (k <= 0)
        return true;
    if (k > g.vertex_count())
        return false;
    CliqueSearch s(g, k);
    return s.run(g.vertices(), 0) >= k;
}

std::pair<int, VertexSet> clique_number(const Graph& g)
{
    const int n = g.vertex_count();
    if (n == 0)
        return { 0, VertexSet{} };

    const int omega = max_clique_size_within(g, g.vertices());

    // Lexicographically least witness: grow the prefix vertex by vertex,
    // keeping v iff a maximum clique through the prefix plus v still exists.
    VertexSet witness;
    VertexSet cand = g.vertices();
    int have = 0;
    for (int v = 0; have < omega; v = cand.next(v)) {
        const VertexSet sub = cand & g.neighbors(v);
        const int need = omega - have - 1;
        if (need == 0 || max_clique_size_within(g, sub, need) >= need) {
            witness.set(v);
            ++have;
            cand = sub;
            v = -1; // restart scan inside the shrunken candidate set
        }
    }
    return { omega, witness };
}

std::pair<int, VertexSet> independence_number(const Graph& g)
{
    return clique_number(complement(g));
}

bool is_4k1_free(const Graph& g)
{
    return !has_clique_of_size(complement(g), 4);
}

bool is_complete(const Graph& g)
{
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.neighbors(v).count() != n - 1)
            return false;
    return true;
}

bool is_odd_cycle(const Graph& g)
{
    const int n = g.vertex_count();
    if (n < 3 || n % 2 == 0)
        return false;
    for (int v = 0; v < n; ++v)
        if (g.neighbors(v).count() != 2)
            return false;
    return is_connected(g);
}

StructureSummary analyze_structure(const Graph& g)
{
    StructureSummary s;
    auto [alpha, iwit] = independence_number(g);
    auto [omega, cwit] = clique_number(g);
    s.alpha = alpha;
    s.omega = omega;
    s.witness_independent_set = iwit;
    s.witness_clique = cwit;
    s.is_4k1_free = alpha <= 3;
    return s;
}

} // namespace bk
