#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isk4/graph.hpp"

namespace isk4 {

struct parse_error : std::runtime_error {
    std::size_t offset;  // byte offset of the offending position
    parse_error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " at byte " + std::to_string(off)), offset(off) {}
};

// graph6: printable encoding of the upper adjacency triangle, column-major,
// 6 bits per byte offset by 63. Orders up to 62 use a one-byte header,
// 63..258047 the '~' three-byte extension.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge-list text: first line "n m", then m lines "u v". Whitespace-tolerant,
// '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// One graph6 value per non-empty line; a leading ">>graph6<<" header is
// tolerated.
std::vector<Graph> parse_graph6_lines(std::string_view text);

}  // namespace isk4
