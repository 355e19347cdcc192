#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldkit/graph.hpp"

namespace foldkit {

// Build recipe for a threshold graph, in vertex-addition order. The first
// entry is AddIsolated by convention (both ops coincide for one vertex).
enum class CreationOp { AddIsolated, AddUniversal };
using CreationSequence = std::vector<CreationOp>;

Graph realize(const CreationSequence& seq);

// Text form over {i, u}, e.g. "iiiu".
CreationSequence parse_creation_sequence(const std::string& text);
std::string format_creation_sequence(const CreationSequence& seq);

struct ForbiddenSubgraph {
  enum class Kind { P4, C4, TwoK2 } kind;
  std::array<int, 4> vertices;
};

std::string forbidden_name(ForbiddenSubgraph::Kind kind);

// Peeling result: either a creation sequence realizing g, or an induced
// P4, C4 or 2K2 witnessing that g is not a threshold graph.
struct ThresholdCheck {
  std::optional<CreationSequence> sequence;
  std::optional<ForbiddenSubgraph> witness;

  bool is_threshold() const { return sequence.has_value(); }
};

ThresholdCheck is_threshold(const Graph& g);

// No induced P4 and no induced C4; false carries the offending 4-vertex set.
struct TriviallyPerfectCheck {
  bool value = false;
  std::optional<ForbiddenSubgraph> witness;
};

TriviallyPerfectCheck is_trivially_perfect(const Graph& g);

// Achromatic number of the realized graph, by peeling from the last-added
// vertex: a universal addition contributes 1 + the rest, an isolated
// addition contributes max{1, rest}; a single vertex counts 1. Equals the
// chromatic and folding numbers of the realized threshold graph.
int psi_threshold(const CreationSequence& seq);

// Lowest-labeled universal vertex with the rest of the graph, if any.
// When present, sigma(g) = 1 + psi(rest) = psi(g) without any fold search.
std::optional<std::pair<int, Graph>> reduce_universal(const Graph& g);

struct MarcuBound {
  int psi = 0;
  int min_n = 0;  // minimum cycle length admitting this achromatic number
};

// psi odd: psi(psi-1)/2; psi even: psi^2/2. Requires psi >= 1.
MarcuBound marcu_min_length(int psi);

// Largest psi whose minimum cycle length does not exceed n. An upper bound
// on the achromatic number of the n-cycle, not an exact formula.
int psi_cycle_upper(int n);

}  // namespace foldkit
