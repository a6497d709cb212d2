#pragma once

#include "bk/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace bk {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Decode one graph6 line (no trailing newline). Strict: exact payload
// length, zero padding bits, n <= kMaxVertices. Throws Graph6Error.
Graph parse_graph6(std::string_view text);

// Canonical-length graph6 encoding; parse_graph6 round-trips it.
std::string to_graph6(const Graph& g);

} // namespace bk
