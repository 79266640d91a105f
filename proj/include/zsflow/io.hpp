#pragma once

#include <string>
#include <string_view>

#include "zsflow/graph.hpp"

namespace zsflow {

class ParseError : public InvalidInput {
public:
    ParseError(const std::string& what, int line)
        : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// Standard graph6 (simple graphs). An optional ">>graph6<<" prefix is
// accepted; only the first non-empty line is read.
MultiGraph parse_graph6(std::string_view text);
std::string write_graph6(const MultiGraph& g);

// "n m" header followed by m "u v" lines. Blank lines and '#' comments are
// skipped.
MultiGraph parse_edge_list(std::string_view text);
std::string write_edge_list(const MultiGraph& g);

}  // namespace zsflow
