#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// graph6 encoding: order prefix, then the upper triangle in column-major
/// order packed six bits per byte, each byte offset by 63.
std::string encode_g6(const Graph& g);

/// Decodes one graph6 line (no trailing newline). Trailing '\r' is tolerated.
Graph decode_g6(std::string_view text);

struct Graph6Line {
    std::size_t line_number = 0;  ///< 1-based
    std::string text;
};

/// Reads non-empty graph6 lines, skipping a ">>graph6<<" header when present.
std::vector<Graph6Line> read_g6_lines(std::istream& in);

}  // namespace isolation
