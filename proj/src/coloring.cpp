#include "foldkit/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "foldkit/errors.hpp"
#include "foldkit/fold.hpp"

namespace foldkit {

void validate_coloring(const Graph& g, const Coloring& c) {
  int n = g.vertex_count();
  if (static_cast<int>(c.assignment.size()) != n) {
    throw PreconditionError("coloring covers " + std::to_string(c.assignment.size()) +
                            " vertices, graph has " + std::to_string(n));
  }
  std::uint64_t used = 0;
  for (int v = 0; v < n; ++v) {
    int col = c.assignment[v];
    if (col < 0 || col >= c.colors) {
      throw PreconditionError("color " + std::to_string(col) + " of vertex " + std::to_string(v) +
                              " outside 0.." + std::to_string(c.colors - 1));
    }
    used |= std::uint64_t{1} << col;
  }
  if (c.colors > 0 && used != (std::uint64_t{1} << c.colors) - 1) {
    throw PreconditionError("coloring does not use all " + std::to_string(c.colors) + " colors");
  }
  if (c.colors == 0 && n > 0) {
    throw PreconditionError("zero colors on a nonempty graph");
  }
}

bool is_proper(const Graph& g, const Coloring& c) {
  validate_coloring(g, c);
  for (auto [u, v] : g.edges()) {
    if (c.assignment[u] == c.assignment[v]) return false;
  }
  return true;
}

bool is_complete(const Graph& g, const Coloring& c) {
  validate_coloring(g, c);
  std::vector<std::uint64_t> covered(c.colors, 0);
  for (auto [u, v] : g.edges()) {
    int a = c.assignment[u], b = c.assignment[v];
    if (a == b) continue;
    covered[a] |= std::uint64_t{1} << b;
    covered[b] |= std::uint64_t{1} << a;
  }
  for (int a = 0; a < c.colors; ++a) {
    for (int b = a + 1; b < c.colors; ++b) {
      if (!(covered[a] >> b & 1)) return false;
    }
  }
  return true;
}

namespace {

int greedy_clique_size(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  std::uint64_t clique = 0;
  int size = 0;
  for (int v : order) {
    if ((g.neighbor_mask(v) & clique) == clique) {
      clique |= std::uint64_t{1} << v;
      ++size;
    }
  }
  return size;
}

bool kcolor_dfs(const Graph& g, int k, int v, int used, std::vector<int>& color) {
  int n = g.vertex_count();
  if (v == n) return true;
  std::uint64_t below = (std::uint64_t{1} << v) - 1;
  std::uint64_t nbrs = g.neighbor_mask(v) & below;
  std::uint64_t blocked = 0;
  for (std::uint64_t m = nbrs; m;) {
    int u = std::countr_zero(m);
    blocked |= std::uint64_t{1} << color[u];
    m &= m - 1;
  }
  // Color indices are interchangeable, so the first unused color is the only
  // fresh one worth trying.
  int cap = std::min(k, used + 1);
  for (int c = 0; c < cap; ++c) {
    if (blocked >> c & 1) continue;
    color[v] = c;
    if (kcolor_dfs(g, k, v + 1, std::max(used, c + 1), color)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

ChiResult chi(const Graph& g, const ChiOptions& opts) {
  int n = g.vertex_count();
  if (n > opts.max_vertices) {
    throw PreconditionError("chi: " + std::to_string(n) + " vertices exceeds the solver bound " +
                            std::to_string(opts.max_vertices));
  }
  if (n == 0) return {0, Coloring{}};
  int lower = std::max(1, greedy_clique_size(g));
  std::vector<int> color(n, -1);
  for (int k = lower; k <= n; ++k) {
    if (kcolor_dfs(g, k, 0, 0, color)) {
      int used = *std::max_element(color.begin(), color.end()) + 1;
      return {used, Coloring{color, used}};
    }
  }
  throw Error("chi: search failed to terminate");  // unreachable: k = n always colors
}

namespace {

// Maximizes the number of independent classes over ordered set partitions.
// Vertices are assigned in label order and a new class always takes the next
// index, which realizes exactly the partitions whose classes are ordered by
// minimum vertex (one representative per unordered partition).
struct PsiSearch {
  const Graph& g;
  int n;
  std::vector<std::uint64_t> class_mask;
  std::vector<std::uint64_t> covered;  // covered[c] = classes sharing an edge with c
  std::vector<int> assign;
  std::vector<int> suffix_edges;  // edges with at least one endpoint >= v
  int covered_count = 0;
  int best = 0;
  std::vector<int> best_assign;

  explicit PsiSearch(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        class_mask(n, 0),
        covered(n, 0),
        assign(n, -1),
        suffix_edges(n + 1, 0) {
    // An edge is still unsettled while its larger endpoint is unassigned.
    for (auto [u, w] : g.edges()) {
      for (int v = 0; v <= w; ++v) ++suffix_edges[v];
    }
  }

  void dfs(int v, int open) {
    if (v == n) {
      if (open > best && covered_count == open * (open - 1) / 2) {
        best = open;
        best_assign = assign;
      }
      return;
    }
    // Even opening a new class for every remaining vertex cannot pass best.
    if (open + (n - v) <= best) return;
    // Improving on best needs C(best+1,2) covered pairs; each not-yet-settled
    // edge covers at most one new pair.
    int needed = (best + 1) * best / 2 - covered_count;
    if (needed > suffix_edges[v]) return;

    std::uint64_t below = (std::uint64_t{1} << v) - 1;
    std::uint64_t assigned_nbrs = g.neighbor_mask(v) & below;
    std::uint64_t nbr_classes = 0;
    for (std::uint64_t m = assigned_nbrs; m;) {
      nbr_classes |= std::uint64_t{1} << assign[std::countr_zero(m)];
      m &= m - 1;
    }

    int last = std::min(open, n - 1);  // class `open` opens a new one
    for (int c = 0; c <= last; ++c) {
      if (c < open && (class_mask[c] & g.neighbor_mask(v))) continue;  // stays independent
      std::uint64_t fresh = nbr_classes & ~covered[c];
      assign[v] = c;
      class_mask[c] |= std::uint64_t{1} << v;
      covered[c] |= fresh;
      for (std::uint64_t m = fresh; m;) {
        covered[std::countr_zero(m)] |= std::uint64_t{1} << c;
        m &= m - 1;
      }
      covered_count += std::popcount(fresh);
      dfs(v + 1, c == open ? open + 1 : open);
      covered_count -= std::popcount(fresh);
      for (std::uint64_t m = fresh; m;) {
        covered[std::countr_zero(m)] &= ~(std::uint64_t{1} << c);
        m &= m - 1;
      }
      covered[c] &= ~fresh;
      class_mask[c] &= ~(std::uint64_t{1} << v);
      assign[v] = -1;
    }
  }
};

}  // namespace

PsiResult psi(const Graph& g, const PsiOptions& opts) {
  int n = g.vertex_count();
  if (n > opts.max_vertices) {
    throw PreconditionError("psi: " + std::to_string(n) + " vertices exceeds the solver bound " +
                            std::to_string(opts.max_vertices));
  }
  if (n == 0) return {0, Coloring{}};
  PsiSearch search(g);
  search.dfs(0, 0);
  return {search.best, Coloring{search.best_assign, search.best}};
}

Coloring coloring_from_trace(const FoldTrace& trace) {
  TraceCheck check = verify_trace(trace);
  if (!check.ok) {
    throw PreconditionError("coloring_from_trace: invalid trace: " + check.message);
  }
  if (!is_clique(trace.target)) {
    throw PreconditionError("coloring_from_trace: target is not a clique");
  }
  return Coloring{trace.class_map, trace.target.vertex_count()};
}

std::string emit_coloring(const Coloring& c) {
  std::ostringstream out;
  out << "coloring v1\n";
  for (std::size_t v = 0; v < c.assignment.size(); ++v) {
    out << v << ' ' << c.assignment[v] << '\n';
  }
  return out.str();
}

Coloring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || (line != "coloring v1" && line != "coloring v1\r")) {
    throw ParseError("coloring: missing \"coloring v1\" header");
  }
  std::vector<int> assignment;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::istringstream fields(line);
    int v = 0, c = 0;
    if (!(fields >> v >> c) || v < 0 || c < 0) {
      throw ParseError("coloring: line " + std::to_string(line_no) +
                       ": expected \"vertex color\"");
    }
    if (v >= static_cast<int>(assignment.size())) assignment.resize(v + 1, -1);
    assignment[v] = c;
  }
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (assignment[v] < 0) {
      throw ParseError("coloring: vertex " + std::to_string(v) + " missing");
    }
  }
  int colors = 0;
  for (int c : assignment) colors = std::max(colors, c + 1);
  return Coloring{assignment, colors};
}

}  // namespace foldkit
