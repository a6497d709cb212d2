#include "bk/graph6.hpp"

namespace bk {

namespace {

    constexpr int kBias = 63;

    bool printable(unsigned char c) { return c >= 63 && c <= 126; }

} // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.empty())
        throw Graph6Error("empty graph6 line");

    std::size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(text[0]) != 126) {
        const unsigned char c = text[0];
        if (!printable(c))
            throw Graph6Error("malformed header: byte outside graph6 range");
        n = c - kBias;
        pos = 1;
    } else {
        // '~' header: 18-bit count in three bytes. The 36-bit '~~' form is
        // beyond our vertex cap anyway.
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw Graph6Error("graph too large: multi-word header exceeds vertex cap");
        if (text.size() < 4)
            throw Graph6Error("malformed header: truncated vertex count");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            const unsigned char c = text[i];
            if (!printable(c))
                throw Graph6Error("malformed header: byte outside graph6 range");
            n = (n << 6) | (c - kBias);
        }
        if (n <= 62)
            throw Graph6Error("malformed header: long form used for small count");
        pos = 4;
    }
    if (n > kMaxVertices)
        throw Graph6Error("graph too large: n=" + std::to_string(n) + " exceeds cap "
            + std::to_string(kMaxVertices));

    const long nbits = n * (n - 1) / 2;
    const long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) < nbytes)
        throw Graph6Error("truncated bit payload");
    if (static_cast<long>(text.size()) - static_cast<long>(pos) > nbytes)
        throw Graph6Error("trailing garbage after bit payload");

    Graph g(static_cast<int>(n));
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const unsigned char c = text[pos + bit / 6];
            if (!printable(c))
                throw Graph6Error("payload byte outside graph6 range");
            if ((c - kBias) >> (5 - bit % 6) & 1)
                edges.emplace_back(i, j);
        }
    }
    // Remaining bits of the last byte are padding and must be zero.
    for (; bit < nbytes * 6; ++bit) {
        const unsigned char c = text[pos + bit / 6];
        if (!printable(c))
            throw Graph6Error("payload byte outside graph6 range");
        if ((c - kBias) >> (5 - bit % 6) & 1)
            throw Graph6Error("nonzero padding bits");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

} // namespace bk
