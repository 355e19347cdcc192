#pragma once

#include <string>
#include <vector>

#include "foldkit/graph.hpp"

namespace foldkit {

// One vertex identification. x and y are labels in the graph state the step
// applies to and must be at distance exactly two there.
struct FoldStep {
  int x = 0;
  int y = 0;

  bool operator==(const FoldStep&) const = default;
};

// A replayable fold sequence. class_map sends each source vertex to its
// final vertex in target; its preimage classes are independent sets of the
// source (folds only ever merge non-adjacent vertices).
struct FoldTrace {
  Graph source;
  std::vector<FoldStep> steps;
  std::vector<int> class_map;
  Graph target;
};

// Pairs {x,y} at distance exactly two, x < y, lexicographic. Empty means no
// simple fold applies (a clique, or a disjoint union of cliques).
std::vector<FoldStep> fold_candidates(const Graph& g);

// Identifies x and y (required at distance two): the merged vertex keeps
// label min(x,y) with neighborhood N(x) u N(y); labels above max(x,y) shift
// down by one.
Graph simple_fold(const Graph& g, int x, int y);

// Replays steps from source, filling class_map and target. Throws
// PreconditionError naming the first invalid step.
FoldTrace make_trace(const Graph& source, std::vector<FoldStep> steps);

// Folds the lexicographically least candidate pair until none remains.
// Connected input only; the end state is then a clique.
FoldTrace maximal_fold(const Graph& g);

struct SigmaOptions {
  int max_vertices = 9;  // exhaustive fold search bound
  // Route graphs with a universal vertex through 1 + psi(g - u) with a
  // witness built from the achromatic certificate, instead of searching.
  bool use_universal_reduction = true;
  int canon_limit = 12;  // states above this are searched without dedup
  int psi_max_vertices = 10;
};

struct SigmaResult {
  int sigma = 0;
  FoldTrace witness;  // ends in a clique with exactly sigma vertices
};

// Exact folding number of a connected graph: the largest clique reachable by
// simple folds, with a replayable witness.
SigmaResult sigma(const Graph& g, const SigmaOptions& opts = {});

struct FoldToChiStats {
  bool fallback_used = false;   // exhaustive chi-preserving search was needed
  int recolor_count = 0;        // optimal recolorings of intermediate states
};

// A fold sequence onto a clique with exactly chi(g) vertices. Greedily folds
// same-colored distance-two pairs of an optimal coloring, recoloring the
// current state when stuck; an exhaustive chi-preserving search backstops the
// rare case where no optimal coloring of a state offers a foldable pair.
FoldTrace fold_to_chi(const Graph& g, FoldToChiStats* stats = nullptr);

// A fold sequence onto K_k for any chi(g) <= k <= sigma(g): replays the
// sigma witness until the state's chromatic number reaches k (each fold
// raises chi by at most one, so k is hit exactly), then folds that state to
// its chromatic clique.
FoldTrace fold_to_k(const Graph& g, int k, const SigmaOptions& opts = {});

struct TraceCheck {
  bool ok = false;
  int failed_step = -1;  // first invalid step, -1 when the steps replay
  std::string message;
};

// Replays the trace: every step must satisfy the distance-two precondition,
// the replay must reach target, and class_map must equal the composed
// per-step identifications.
TraceCheck verify_trace(const FoldTrace& trace);

// Line format: "fold-trace v1", the source as graph6, one "fold x y" line
// per step, then "target <graph6>".
std::string emit_trace(const FoldTrace& trace);
FoldTrace parse_trace(const std::string& text);

}  // namespace foldkit
