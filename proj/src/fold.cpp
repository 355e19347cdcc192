#include "foldkit/fold.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "foldkit/canonical.hpp"
#include "foldkit/coloring.hpp"
#include "foldkit/errors.hpp"
#include "foldkit/graph_io.hpp"

namespace foldkit {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Distance two <=> non-adjacent with a common neighbor.
bool at_distance_two(const Graph& g, int x, int y) {
  return x != y && !g.has_edge(x, y) && (g.neighbor_mask(x) & g.neighbor_mask(y));
}

std::string fold_error(const Graph& g, int x, int y) {
  std::string head = "fold (" + std::to_string(x) + "," + std::to_string(y) + "): ";
  if (x == y) return head + "vertices are equal";
  if (g.has_edge(x, y)) return head + "vertices are adjacent";
  auto d = distance(g, x, y);
  if (!d) return head + "vertices are in different components";
  return head + "vertices are at distance " + std::to_string(*d);
}

// Label map induced by folding b into a (a < b): keep below b, shift above.
int fold_relabel(int v, int a, int b) {
  if (v == b) return a;
  return v < b ? v : v - 1;
}

std::uint64_t fold_remask(std::uint64_t m, int a, int b) {
  std::uint64_t low = m & (bit(b) - 1);
  std::uint64_t high = b + 1 >= kMaxVertices ? 0 : m >> (b + 1) << b;
  std::uint64_t out = low | high;
  if (m >> b & 1) out |= bit(a);
  return out;
}

}  // namespace

std::vector<FoldStep> fold_candidates(const Graph& g) {
  std::vector<FoldStep> out;
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (int y = x + 1; y < g.vertex_count(); ++y) {
      if (at_distance_two(g, x, y)) out.push_back({x, y});
    }
  }
  return out;
}

Graph simple_fold(const Graph& g, int x, int y) {
  g.neighbor_mask(x);  // range checks
  g.neighbor_mask(y);
  if (!at_distance_two(g, x, y)) throw PreconditionError(fold_error(g, x, y));
  int a = std::min(x, y), b = std::max(x, y);
  int n = g.vertex_count();
  Graph out(n - 1);
  std::vector<std::uint64_t> rows(n - 1, 0);
  for (int v = 0; v < n; ++v) {
    std::uint64_t row = g.neighbor_mask(v);
    if (v == a) row |= g.neighbor_mask(b);
    if (v == b) continue;
    rows[fold_relabel(v, a, b)] = fold_remask(row, a, b);
  }
  for (int u = 0; u < n - 1; ++u) {
    std::uint64_t higher = rows[u] >> (u + 1) << (u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      out.add_edge(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

FoldTrace make_trace(const Graph& source, std::vector<FoldStep> steps) {
  FoldTrace trace;
  trace.source = source;
  trace.class_map.resize(source.vertex_count());
  for (int v = 0; v < source.vertex_count(); ++v) trace.class_map[v] = v;
  Graph state = source;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto [x, y] = steps[i];
    try {
      state = simple_fold(state, x, y);
    } catch (const PreconditionError& e) {
      throw PreconditionError("step " + std::to_string(i + 1) + ": " + e.what());
    }
    int a = std::min(x, y), b = std::max(x, y);
    for (int& label : trace.class_map) label = fold_relabel(label, a, b);
  }
  trace.steps = std::move(steps);
  trace.target = state;
  return trace;
}

FoldTrace maximal_fold(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("maximal_fold: graph is disconnected");
  std::vector<FoldStep> steps;
  Graph state = g;
  for (;;) {
    auto candidates = fold_candidates(state);
    if (candidates.empty()) break;
    steps.push_back(candidates.front());
    state = simple_fold(state, candidates.front().x, candidates.front().y);
  }
  return make_trace(g, std::move(steps));
}

namespace {

// Largest s with s(s-1)/2 <= m.
int clique_edge_bound(int m) {
  int s = 1;
  while ((s + 1) * s / 2 <= m) ++s;
  return s;
}

struct SigmaSearch {
  int canon_limit;
  std::unordered_set<std::string> seen;
  int best = 0;
  std::vector<FoldStep> best_steps;
  std::vector<FoldStep> current;

  void dfs(const Graph& state) {
    if (is_clique(state)) {
      if (state.vertex_count() > best) {
        best = state.vertex_count();
        best_steps = current;
      }
      return;
    }
    // Sound upper bounds for everything below this state: a non-clique must
    // fold at least once more and each fold removes one vertex, so the final
    // clique has at most n-1 vertices; folds never create edges (they only
    // merge parallel ones), so a K_s target needs s(s-1)/2 <= m already here.
    int ub = std::min(state.vertex_count() - 1, clique_edge_bound(state.edge_count()));
    if (ub <= best) return;
    if (state.vertex_count() <= canon_limit) {
      // Same state (up to labels), same reachable cliques; and since best
      // only grows, a revisit can never beat the outcome of the first visit.
      if (!seen.insert(canonical_key(state, canon_limit).bytes).second) return;
    }
    for (FoldStep step : fold_candidates(state)) {
      current.push_back(step);
      dfs(simple_fold(state, step.x, step.y));
      current.pop_back();
    }
  }
};

// Witness for a graph with universal vertex u: any achromatic coloring of g
// folds class by class down to one vertex each. Two vertices of a class are
// non-adjacent and share the neighbor u, so every intra-class pair is at
// distance two throughout.
FoldTrace universal_witness(const Graph& g, const Coloring& coloring) {
  std::vector<FoldStep> steps;
  std::vector<int> cls(coloring.assignment);  // per current label
  Graph state = g;
  for (int c = 0; c < coloring.colors; ++c) {
    for (;;) {
      int first = -1, second = -1;
      for (int v = 0; v < state.vertex_count() && second < 0; ++v) {
        if (cls[v] != c) continue;
        (first < 0 ? first : second) = v;
      }
      if (second < 0) break;
      steps.push_back({first, second});
      state = simple_fold(state, first, second);
      cls.erase(cls.begin() + second);  // first < second keeps its label
    }
  }
  return make_trace(g, std::move(steps));
}

}  // namespace

SigmaResult sigma(const Graph& g, const SigmaOptions& opts) {
  if (!is_connected(g)) throw PreconditionError("sigma: graph is disconnected");
  if (opts.use_universal_reduction && g.vertex_count() >= 1) {
    if (auto u = universal_vertex(g); u && g.vertex_count() - 1 <= opts.psi_max_vertices) {
      Graph rest = g.induced(g.full_mask() & ~bit(*u));
      PsiResult rest_psi = psi(rest, PsiOptions{opts.psi_max_vertices});
      // Extend the certificate of g-u by u in a class of its own; u is
      // adjacent to everything, so the extension stays complete.
      Coloring coloring;
      coloring.colors = rest_psi.value + 1;
      coloring.assignment.resize(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == *u) {
          coloring.assignment[v] = rest_psi.value;
        } else {
          coloring.assignment[v] = rest_psi.value == 0 ? 0 : rest_psi.certificate.assignment[v < *u ? v : v - 1];
        }
      }
      FoldTrace witness = universal_witness(g, coloring);
      return {coloring.colors, std::move(witness)};
    }
  }
  if (g.vertex_count() > opts.max_vertices) {
    throw PreconditionError("sigma: " + std::to_string(g.vertex_count()) +
                            " vertices exceeds the search bound " +
                            std::to_string(opts.max_vertices));
  }
  // Seed with the deterministic maximal fold; the search then only keeps
  // strict improvements, so the result is deterministic.
  FoldTrace seed = maximal_fold(g);
  SigmaSearch search;
  search.canon_limit = opts.canon_limit;
  search.best = seed.target.vertex_count();
  search.best_steps = seed.steps;
  search.dfs(g);
  return {search.best, make_trace(g, std::move(search.best_steps))};
}

namespace {

// Finds a same-colored pair at distance two, lexicographic by (color, pair).
std::optional<FoldStep> foldable_pair(const Graph& g, const std::vector<int>& cls, int colors) {
  for (int c = 0; c < colors; ++c) {
    for (int x = 0; x < g.vertex_count(); ++x) {
      if (cls[x] != c) continue;
      for (int y = x + 1; y < g.vertex_count(); ++y) {
        if (cls[y] == c && at_distance_two(g, x, y)) return FoldStep{x, y};
      }
    }
  }
  return std::nullopt;
}

// Exhaustive fallback: searches fold sequences that never raise the
// chromatic number. One exists from any connected state with chi = target
// because folding onto the chi-sized clique is always possible and chi never
// decreases along folds, so such a sequence cannot pass through a state with
// larger chi.
bool chi_preserving_path(const Graph& state, int target, std::unordered_set<std::string>& seen,
                         std::vector<FoldStep>& out) {
  if (is_clique(state)) return state.vertex_count() == target;
  if (auto key = try_canonical_key(state); key && !seen.insert(key->bytes).second) return false;
  for (FoldStep step : fold_candidates(state)) {
    Graph child = simple_fold(state, step.x, step.y);
    if (chi(child).value > target) continue;
    out.push_back(step);
    if (chi_preserving_path(child, target, seen, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

FoldTrace fold_to_chi(const Graph& g, FoldToChiStats* stats) {
  if (!is_connected(g)) throw PreconditionError("fold_to_chi: graph is disconnected");
  FoldToChiStats local;
  FoldToChiStats& st = stats ? *stats : local;
  st = FoldToChiStats{};

  ChiResult opt = chi(g);
  int target = opt.value;
  std::vector<int> cls = opt.certificate.assignment;
  Graph state = g;
  std::vector<FoldStep> steps;
  while (!is_clique(state)) {
    auto pair = foldable_pair(state, cls, target);
    if (!pair) {
      // The carried coloring ran out of distance-two pairs; an optimal
      // coloring of the current state may group differently.
      ++st.recolor_count;
      cls = chi(state).certificate.assignment;
      pair = foldable_pair(state, cls, target);
    }
    if (!pair) {
      st.fallback_used = true;
      std::unordered_set<std::string> seen;
      if (!chi_preserving_path(state, target, seen, steps)) {
        throw Error("fold_to_chi: no chi-preserving fold sequence found");  // unreachable
      }
      return make_trace(g, std::move(steps));
    }
    auto [x, y] = *pair;
    steps.push_back(*pair);
    state = simple_fold(state, x, y);
    cls.erase(cls.begin() + std::max(x, y));  // merged vertex keeps min(x,y) and its color
  }
  return make_trace(g, std::move(steps));
}

FoldTrace fold_to_k(const Graph& g, int k, const SigmaOptions& opts) {
  if (!is_connected(g)) throw PreconditionError("fold_to_k: graph is disconnected");
  int chi_g = chi(g).value;
  SigmaResult sig = sigma(g, opts);
  if (k < chi_g || k > sig.sigma) {
    throw RangeError("fold_to_k: k=" + std::to_string(k) + " outside [" + std::to_string(chi_g) +
                     ", " + std::to_string(sig.sigma) + "]");
  }
  // Walk the sigma witness until the state's chromatic number reaches k.
  // chi starts at chi(g) <= k, ends at sigma >= k, and moves by at most one
  // per fold, so the walk stops with chi exactly k.
  Graph state = g;
  std::vector<FoldStep> steps;
  std::size_t i = 0;
  while (chi(state).value < k) {
    FoldStep step = sig.witness.steps.at(i++);
    steps.push_back(step);
    state = simple_fold(state, step.x, step.y);
  }
  FoldTrace tail = fold_to_chi(state);
  steps.insert(steps.end(), tail.steps.begin(), tail.steps.end());
  return make_trace(g, std::move(steps));
}

TraceCheck verify_trace(const FoldTrace& trace) {
  Graph state = trace.source;
  std::vector<int> map(trace.source.vertex_count());
  for (int v = 0; v < trace.source.vertex_count(); ++v) map[v] = v;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    auto [x, y] = trace.steps[i];
    if (x < 0 || x >= state.vertex_count() || y < 0 || y >= state.vertex_count()) {
      return {false, static_cast<int>(i + 1),
              "step " + std::to_string(i + 1) + ": label outside 0.." +
                  std::to_string(state.vertex_count() - 1)};
    }
    if (!at_distance_two(state, x, y)) {
      return {false, static_cast<int>(i + 1), fold_error(state, x, y)};
    }
    state = simple_fold(state, x, y);
    int a = std::min(x, y), b = std::max(x, y);
    for (int& label : map) label = fold_relabel(label, a, b);
  }
  if (!(state == trace.target)) {
    return {false, -1, "target mismatch: replay ends at " + emit_graph6(state) + ", trace says " +
                           emit_graph6(trace.target)};
  }
  if (map != trace.class_map) {
    for (std::size_t v = 0; v < map.size(); ++v) {
      if (v >= trace.class_map.size() || map[v] != trace.class_map[v]) {
        return {false, -1,
                "class map mismatch at vertex " + std::to_string(v) + ": replay says " +
                    std::to_string(map[v])};
      }
    }
    return {false, -1, "class map has " + std::to_string(trace.class_map.size()) +
                           " entries, expected " + std::to_string(map.size())};
  }
  return {true, -1, ""};
}

std::string emit_trace(const FoldTrace& trace) {
  std::ostringstream out;
  out << "fold-trace v1\n" << emit_graph6(trace.source) << '\n';
  for (const FoldStep& step : trace.steps) out << "fold " << step.x << ' ' << step.y << '\n';
  out << "target " << emit_graph6(trace.target) << '\n';
  return out.str();
}

FoldTrace parse_trace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) throw ParseError(std::string("trace: missing ") + what);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  };
  next_line("header");
  if (line != "fold-trace v1") throw ParseError("trace: expected \"fold-trace v1\" header");
  next_line("source graph");
  FoldTrace trace;
  trace.source = parse_graph6(line);
  bool saw_target = false;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (saw_target) throw ParseError("trace: content after target line");
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "fold") {
      FoldStep step;
      if (!(fields >> step.x >> step.y) || !(fields >> std::ws).eof()) {
        throw ParseError("trace: malformed fold line \"" + line + "\"");
      }
      trace.steps.push_back(step);
    } else if (tag == "target") {
      std::string g6;
      if (!(fields >> g6) || !(fields >> std::ws).eof()) {
        throw ParseError("trace: malformed target line");
      }
      trace.target = parse_graph6(g6);
      saw_target = true;
    } else {
      throw ParseError("trace: unknown line \"" + line + "\"");
    }
  }
  if (!saw_target) throw ParseError("trace: missing target line");
  // Fill the class map by replay when the steps are valid; verify_trace
  // reports the precise failure otherwise.
  try {
    FoldTrace replayed = make_trace(trace.source, trace.steps);
    trace.class_map = std::move(replayed.class_map);
  } catch (const PreconditionError&) {
    trace.class_map.clear();
  }
  return trace;
}

}  // namespace foldkit
