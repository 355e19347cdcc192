#pragma once

#include <string>

#include "foldkit/graph.hpp"

namespace foldkit {

// graph6: header byte 63+n for n <= 62 (long form '~' + three sextets above
// that), then the upper triangle in column order (0,1),(0,2),(1,2),(0,3),...
// packed big-endian six bits per printable byte, zero-padded.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// First line "n <count>", then one "u v" pair per line, 0-based.
// Duplicate lines collapse; loops and out-of-range endpoints are rejected
// with their line number.
Graph parse_edge_list(const std::string& text);

}  // namespace foldkit
