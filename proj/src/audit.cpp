#include "bk/audit.hpp"

#include "bk/structure.hpp"

#include <stdexcept>

namespace bk {

namespace {

    std::string vname(int which) { return which == 0 ? "X" : "Y"; }

} // namespace

ConfigAudit audit_config(const Graph& g, const Coloring& c, int u)
{
    const int n = g.vertex_count();
    if (u < 0 || u >= n)
        throw std::invalid_argument("audit_config: center out of range");
    for (int v = 0; v < n; ++v)
        if (v != u && !c.assigned(v))
            throw std::invalid_argument("audit_config: coloring not total on G - u (vertex "
                + std::to_string(v) + " uncolored)");
    for (int v = 0; v < n; ++v) {
        if (v == u || !c.assigned(v))
            continue;
        for (int w = g.neighbors(v).next(v); w != -1; w = g.neighbors(v).next(w))
            if (w != u && c.at(w) == c.at(v))
                throw std::invalid_argument("audit_config: improper coloring, edge ("
                    + std::to_string(v) + "," + std::to_string(w) + ") has color "
                    + std::to_string(c.at(v)) + " on both ends");
    }

    ConfigAudit a;
    a.center = u;
    a.palette = c.palette;

    const PaletteProfile prof = palette_profile(g, c, u);
    if (g.degree(u) != g.max_degree()) {
        a.not_applicable_reason = "center is not a maximum-degree vertex";
        return a;
    }
    if (!prof.launch_configuration(g.degree(u))) {
        if (!prof.missing_colors().empty())
            a.not_applicable_reason = "a palette color is missing from N(center): extension is direct";
        else
            a.not_applicable_reason
                = "N(center) does not show palette-1 unique colors plus one repeated pair";
        return a;
    }
    a.applicable = true;

    a.unique_colors = prof.unique_colors();
    a.pair_color = prof.repeat_colors().front();
    const std::vector<int> pair = prof.repeat_vertices[a.pair_color].to_vector();
    a.pair_x = pair[0];
    a.pair_y = pair[1];

    const std::vector<VertexSet> cls = color_classes(g, c);
    const auto A = [&](int i) { return prof.unique_vertex[i]; };

    a.uniques_pairwise_adjacent = true;
    for (std::size_t s = 0; s < a.unique_colors.size(); ++s)
        for (std::size_t t = s + 1; t < a.unique_colors.size(); ++t)
            if (!g.has_edge(A(a.unique_colors[s]), A(a.unique_colors[t])))
                a.uniques_pairwise_adjacent = false;

    // is A_m the only m-vertex in N(v)?
    const auto only_m_vertex_of = [&](int m, int v) {
        return (cls[m] & g.neighbors(v)) == VertexSet::single(A(m));
    };

    // Case-1 conditions range over nonadjacent unique pairs; all three hold
    // vacuously when the uniques are pairwise adjacent.
    for (std::size_t s = 0; s < a.unique_colors.size(); ++s) {
        for (std::size_t t = s + 1; t < a.unique_colors.size(); ++t) {
            const int i = a.unique_colors[s], j = a.unique_colors[t];
            if (g.has_edge(A(i), A(j)))
                continue;
            for (int m : a.unique_colors) {
                if (m == i || m == j)
                    continue;
                if (only_m_vertex_of(m, A(i)) && only_m_vertex_of(m, A(j)))
                    a.cond_a.violate({ i, j, m },
                        "A_" + std::to_string(m) + " is the only " + std::to_string(m)
                            + "-vertex of both A_" + std::to_string(i) + " and A_"
                            + std::to_string(j));
            }
            std::vector<int> common;
            for (int m : a.unique_colors)
                if (m != i && m != j && g.has_edge(A(i), A(m)) && g.has_edge(A(j), A(m)))
                    common.push_back(m);
            if (common.size() > 2) {
                std::string list;
                for (int m : common)
                    list += (list.empty() ? "" : ",") + std::to_string(m);
                std::vector<int> tuple{ i, j };
                tuple.insert(tuple.end(), common.begin(), common.end());
                a.cond_b.violate(std::move(tuple),
                    "A_" + std::to_string(i) + ", A_" + std::to_string(j)
                        + " share adjacent uniques {" + list + "}");
            }
        }
    }

    for (int i : a.unique_colors) {
        std::vector<int> nonadj, adj;
        for (int m : a.unique_colors) {
            if (m == i)
                continue;
            (g.has_edge(A(i), A(m)) ? adj : nonadj).push_back(m);
        }
        if (nonadj.size() > 3) {
            std::vector<int> tuple{ i };
            tuple.insert(tuple.end(), nonadj.begin(), nonadj.end());
            a.cond_c.violate(std::move(tuple),
                "A_" + std::to_string(i) + " is non-adjacent to "
                    + std::to_string(nonadj.size()) + " other uniques");
        }
        if (adj.size() < 3)
            a.cond_c_inference.violate({ i },
                "A_" + std::to_string(i) + " is adjacent to only "
                    + std::to_string(adj.size()) + " other uniques");
    }

    // Case 2, I
    {
        std::vector<int> isolated;
        for (int i : a.unique_colors)
            if (!g.has_edge(A(i), a.pair_x) && !g.has_edge(A(i), a.pair_y))
                isolated.push_back(i);
        if (isolated.size() > 2) {
            std::string list;
            for (int i : isolated)
                list += (list.empty() ? "" : ",") + std::to_string(i);
            a.case_i.violate(isolated,
                "uniques {" + list + "} are non-adjacent to both X and Y");
        }
    }

    // Case 2, II
    for (int i : a.unique_colors)
        for (int j : a.unique_colors) {
            if (i == j)
                continue;
            if ((cls[j] & g.neighbors(A(i))).empty())
                a.case_ii.violate({ i, j },
                    "A_" + std::to_string(i) + " has no " + std::to_string(j) + "-vertex");
        }

    // Case 2, III
    for (int which = 0; which < 2; ++which) {
        const int xy = which == 0 ? a.pair_x : a.pair_y;
        for (int k : a.unique_colors)
            if ((cls[k] & g.neighbors(xy)).empty())
                a.case_iii.violate({ which, k },
                    vname(which) + " has no " + std::to_string(k) + "-vertex");
    }

    // Case 2, IV
    {
        const int omega = clique_number(g).first;
        for (int which = 0; which < 2; ++which) {
            const int xy = which == 0 ? a.pair_x : a.pair_y;
            int adj = 0;
            for (int i : a.unique_colors)
                if (g.has_edge(xy, A(i)))
                    ++adj;
            if (adj < omega - 5)
                a.case_iv.violate({ which, adj, omega },
                    vname(which) + " is adjacent to " + std::to_string(adj)
                        + " uniques, below omega-5 = " + std::to_string(omega - 5));
        }
    }

    // Case 2, V
    for (int i : a.unique_colors) {
        const VertexSet pv = cls[a.pair_color] & g.neighbors(A(i));
        for (int which = 0; which < 2; ++which) {
            const int xy = which == 0 ? a.pair_x : a.pair_y;
            if (pv == VertexSet::single(xy))
                a.case_v.violate({ which, i },
                    vname(which) + " is the only " + std::to_string(a.pair_color)
                        + "-vertex of A_" + std::to_string(i));
        }
    }

    return a;
}

} // namespace bk
