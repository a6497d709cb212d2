#include "bk/enumerate.hpp"

#include "bk/canonical.hpp"
#include "bk/structure.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace bk {

namespace {

    struct Augmenter {
        int target;
        const GraphPredicate& prune;
        const GraphSink& yield;

        void grow(const Graph& g, const std::string& form)
        {
            if (g.vertex_count() == target) {
                yield(g);
                return;
            }
            const int k = g.vertex_count();
            std::set<std::string> seen; // child classes handled under this parent
            for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
                const Graph child = with_added_vertex(g, VertexSet::from_mask(mask));
                if (prune && !prune(child))
                    continue;
                CanonicalForm cf = canonical_form(child);
                if (!seen.insert(cf.graph6).second)
                    continue;
                const int last = cf.order.back();
                // Accept iff the parent is the child's canonical parent. When
                // the canonical last vertex is the new one, deleting it gives
                // the parent verbatim.
                if (last != k
                    && canonical_form(delete_vertex(child, last)).graph6 != form)
                    continue;
                grow(child, cf.graph6);
            }
        }
    };

} // namespace

void enumerate_graphs(int n, const GraphPredicate& prune, const GraphSink& yield)
{
    if (n < 0 || n > kEnumerationScope)
        throw std::invalid_argument("enumeration scope exceeded: n=" + std::to_string(n)
            + " not in 0.." + std::to_string(kEnumerationScope));
    const Graph start(n == 0 ? 0 : 1);
    if (prune && !prune(start))
        return;
    if (n == 0) {
        yield(start);
        return;
    }
    Augmenter aug{ n, prune, yield };
    aug.grow(start, canonical_form(start).graph6);
}

GraphPredicate alpha_at_most(int bound)
{
    return [bound](const Graph& g) {
        return !has_clique_of_size(complement(g), bound + 1);
    };
}

std::vector<Graph> enumerate_all(int n, int alpha_max)
{
    std::vector<Graph> out;
    enumerate_graphs(
        n, alpha_max < 0 ? GraphPredicate{} : alpha_at_most(alpha_max),
        [&](const Graph& g) { out.push_back(g); });
    return out;
}

} // namespace bk
