#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bk::oracle {

Graph graph_from_mask(int n, std::uint64_t mask)
{
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (mask >> bit & 1)
                edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

std::uint64_t mask_from_graph(const Graph& g)
{
    const int n = g.vertex_count();
    std::uint64_t mask = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j))
                mask |= 1ull << bit;
    return mask;
}

std::pair<int, std::vector<int>> brute_max_independent_set(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 24)
        throw std::invalid_argument("oracle scope: n too large for subset enumeration");
    int best = 0;
    std::vector<int> witness;
    for (std::uint64_t sub = 0; sub < (1ull << n); ++sub) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (sub >> v & 1)
                members.push_back(v);
        if (static_cast<int>(members.size()) < best)
            continue;
        bool independent = true;
        for (std::size_t a = 0; a < members.size() && independent; ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (g.has_edge(members[a], members[b])) {
                    independent = false;
                    break;
                }
        if (!independent)
            continue;
        const int size = static_cast<int>(members.size());
        if (size > best || (size == best && members < witness) || witness.empty()) {
            best = size;
            witness = members;
        }
    }
    return { best, witness };
}

std::pair<int, std::vector<int>> brute_max_clique(const Graph& g)
{
    return brute_max_independent_set(complement(g));
}

bool brute_colorable(const Graph& g, int k)
{
    const int n = g.vertex_count();
    if (n == 0)
        return true;
    if (k <= 0)
        return false;
    std::vector<int> a(n, 1);
    while (true) {
        bool proper = true;
        for (int v = 0; v < n && proper; ++v)
            for (int u = g.neighbors(v).next(v); u != -1; u = g.neighbors(v).next(u))
                if (a[u] == a[v]) {
                    proper = false;
                    break;
                }
        if (proper)
            return true;
        int pos = 0;
        while (pos < n && a[pos] == k)
            a[pos++] = 1;
        if (pos == n)
            return false;
        ++a[pos];
    }
}

int brute_chromatic(const Graph& g)
{
    for (int k = 0;; ++k)
        if (brute_colorable(g, k))
            return k;
}

namespace {

    long sieve_count(int n, bool (*pred)(const Graph&))
    {
        if (n < 0 || n > 8)
            throw std::invalid_argument("oracle scope: iso sieve supports n <= 8");
        if (n <= 1)
            return 1;
        const int nbits = n * (n - 1) / 2;

        // Per permutation, where each upper-triangle bit position lands.
        std::vector<std::vector<int>> bitmaps;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        const auto pair_index = [](int i, int j) {
            if (i > j)
                std::swap(i, j);
            return j * (j - 1) / 2 + i;
        };
        do {
            std::vector<int> where(nbits);
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    where[pair_index(i, j)] = pair_index(perm[i], perm[j]);
            bitmaps.push_back(std::move(where));
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::vector<bool> seen(1ull << nbits, false);
        long classes = 0;
        for (std::uint64_t mask = 0; mask < (1ull << nbits); ++mask) {
            if (seen[mask])
                continue;
            if (!pred || pred(graph_from_mask(n, mask)))
                ++classes;
            for (const auto& where : bitmaps) {
                std::uint64_t image = 0;
                std::uint64_t m = mask;
                while (m) {
                    const int b = std::countr_zero(m);
                    image |= 1ull << where[b];
                    m &= m - 1;
                }
                seen[image] = true;
            }
        }
        return classes;
    }

} // namespace

long brute_iso_class_count(int n)
{
    return sieve_count(n, nullptr);
}

long brute_iso_class_count_if(int n, bool (*pred)(const Graph&))
{
    return sieve_count(n, pred);
}

} // namespace bk::oracle
