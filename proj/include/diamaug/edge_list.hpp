#pragma once

#include <iosfwd>
#include <string>

#include "diamaug/graph.hpp"

namespace diamaug {

// Text format: a header line "n m", then m lines "u v" (0-based). Lines whose
// first non-blank character is '#' and blank lines are skipped. Duplicate
// edges and self-loops are parse errors.

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// "u-v,u-v,..." (whitespace tolerant, empty string for no edges).
EdgeSet parse_edge_spec(const std::string& text);

}  // namespace diamaug
