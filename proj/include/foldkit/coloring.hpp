#pragma once

#include <string>
#include <vector>

#include "foldkit/graph.hpp"

namespace foldkit {

struct FoldTrace;

// Vertex -> color assignment using dense color indices 0..colors-1,
// all of them used.
struct Coloring {
  std::vector<int> assignment;
  int colors = 0;

  bool operator==(const Coloring&) const = default;
};

// Throws PreconditionError unless the assignment covers every vertex with a
// color in 0..colors-1 and every color occurs.
void validate_coloring(const Graph& g, const Coloring& c);

// No edge monochromatic.
bool is_proper(const Graph& g, const Coloring& c);

// Every unordered color pair appears on at least one edge.
bool is_complete(const Graph& g, const Coloring& c);

struct ChiOptions {
  int max_vertices = 16;
};

struct ChiResult {
  int value = 0;
  Coloring certificate;
};

// Exact chromatic number: iterative deepening on k starting from a greedy
// clique lower bound.
ChiResult chi(const Graph& g, const ChiOptions& opts = {});

struct PsiOptions {
  int max_vertices = 10;
};

struct PsiResult {
  int value = 0;
  Coloring certificate;
};

// Exact achromatic number: branch over ordered partitions into independent
// classes (classes ordered by their minimum vertex), maximizing the class
// count under completeness pruning.
PsiResult psi(const Graph& g, const PsiOptions& opts = {});

// The coloring whose classes are the trace's class_map preimages. Requires a
// trace that verifies and ends in a clique; the result is then proper and
// complete with one color per target vertex.
Coloring coloring_from_trace(const FoldTrace& trace);

// "coloring v1" header, then one "vertex color" line per vertex.
std::string emit_coloring(const Coloring& c);
Coloring parse_coloring(const std::string& text);

}  // namespace foldkit
