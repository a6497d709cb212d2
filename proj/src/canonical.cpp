#include "bk/canonical.hpp"

#include "bk/graph6.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bk {

namespace {

    using Partition = std::vector<std::vector<int>>;

    // Split every cell by neighbor counts into every current cell, subcells
    // ordered by ascending count; repeat to fixpoint. Invariant under
    // relabeling, which is all that canonical labeling needs.
    void refine(const Graph& g, Partition& cells)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<VertexSet> cellsets(cells.size());
            for (std::size_t i = 0; i < cells.size(); ++i)
                for (int v : cells[i])
                    cellsets[i].set(v);
            Partition next;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                bool split = false;
                std::vector<std::vector<int>> parts{ cell };
                for (const auto& splitter : cellsets) {
                    std::vector<std::vector<int>> finer;
                    for (const auto& part : parts) {
                        if (part.size() == 1) {
                            finer.push_back(part);
                            continue;
                        }
                        std::map<int, std::vector<int>> by_count;
                        for (int v : part)
                            by_count[(g.neighbors(v) & splitter).count()].push_back(v);
                        if (by_count.size() > 1)
                            split = true;
                        for (auto& [cnt, grp] : by_count)
                            finer.push_back(std::move(grp));
                    }
                    parts = std::move(finer);
                }
                if (split)
                    changed = true;
                for (auto& p : parts)
                    next.push_back(std::move(p));
            }
            cells = std::move(next);
        }
    }

    // Upper-triangle adjacency bits of g relabeled by order, packed row of
    // words; lexicographic comparison of these keys picks the canonical leaf.
    std::vector<std::uint64_t> leaf_key(const Graph& g, const std::vector<int>& order)
    {
        const int n = static_cast<int>(order.size());
        std::vector<std::uint64_t> key((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
        std::size_t bit = 0;
        for (int q = 1; q < n; ++q)
            for (int p = 0; p < q; ++p, ++bit)
                if (g.has_edge(order[p], order[q]))
                    key[bit >> 6] |= 1ull << (63 - (bit & 63));
        return key;
    }

    struct CanonSearch {
        const Graph& g;
        std::vector<std::uint64_t> best_key;
        std::vector<int> best_order;
        bool have_leaf = false;

        void visit(Partition cells)
        {
            refine(g, cells);
            int target = -1;
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (cells[i].size() > 1) {
                    target = static_cast<int>(i);
                    break;
                }
            if (target == -1) {
                std::vector<int> order;
                order.reserve(g.vertex_count());
                for (const auto& cell : cells)
                    order.push_back(cell[0]);
                auto key = leaf_key(g, order);
                if (!have_leaf || key < best_key) {
                    best_key = std::move(key);
                    best_order = std::move(order);
                    have_leaf = true;
                }
                return;
            }
            const std::vector<int> cell = cells[target];
            for (int v : cell) {
                Partition child;
                child.reserve(cells.size() + 1);
                for (int i = 0; i < target; ++i)
                    child.push_back(cells[i]);
                child.push_back({ v });
                std::vector<int> rest;
                for (int w : cell)
                    if (w != v)
                        rest.push_back(w);
                child.push_back(std::move(rest));
                for (std::size_t i = target + 1; i < cells.size(); ++i)
                    child.push_back(cells[i]);
                visit(std::move(child));
            }
        }
    };

    std::vector<int> canonical_order(const Graph& g);

    std::vector<int> canonical_order_connected(const Graph& g)
    {
        const int n = g.vertex_count();
        // Complement disconnected: its canonical labeling is also canonical
        // for g (Aut(g) = Aut(~g)), and its components are small.
        const Graph co = complement(g);
        if (!is_connected(co))
            return canonical_order(co);

        CanonSearch s{ g, {}, {}, false };
        Partition start{ std::vector<int>(static_cast<std::size_t>(n)) };
        for (int v = 0; v < n; ++v)
            start[0][v] = v;
        s.visit(std::move(start));
        return s.best_order;
    }

    std::vector<int> canonical_order(const Graph& g)
    {
        const int n = g.vertex_count();
        if (n <= 1) {
            return n == 1 ? std::vector<int>{ 0 } : std::vector<int>{};
        }
        if (is_connected(g))
            return canonical_order_connected(g);

        // Components, each canonicalized on its own, assembled in a fixed
        // order of (size, canonical string).
        struct Piece {
            int size;
            std::string form;
            std::vector<int> order; // original labels of g
        };
        std::vector<Piece> pieces;
        VertexSet remaining = g.vertices();
        while (!remaining.empty()) {
            const VertexSet comp = component_of(g, remaining.lowest());
            const std::vector<int> labels = comp.to_vector();
            const Graph sub = induced_subgraph(g, comp);
            const std::vector<int> sub_order = canonical_order(sub);
            Piece p;
            p.size = sub.vertex_count();
            p.order.reserve(sub_order.size());
            for (int pos : sub_order)
                p.order.push_back(labels[pos]);
            p.form = to_graph6(apply_labeling(sub, sub_order));
            pieces.push_back(std::move(p));
            remaining = remaining.minus(comp);
        }
        std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
            if (a.size != b.size)
                return a.size < b.size;
            return a.form < b.form;
        });
        std::vector<int> order;
        order.reserve(n);
        for (const auto& p : pieces)
            order.insert(order.end(), p.order.begin(), p.order.end());
        return order;
    }

} // namespace

CanonicalForm canonical_form(const Graph& g)
{
    if (g.vertex_count() > 64)
        throw std::invalid_argument("canonical form scope exceeded: n > 64");
    CanonicalForm f;
    f.order = canonical_order(g);
    f.graph6 = to_graph6(apply_labeling(g, f.order));
    return f;
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a).graph6 == canonical_form(b).graph6;
}

} // namespace bk
