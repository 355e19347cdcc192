#pragma once

// Reference implementations used only by tests. Each is deliberately naive
// and structurally independent of the solver it cross-checks: string-level
// bit decoding instead of bit twiddling, assignment odometers instead of
// branch and bound, a full fold-tree walk with no memoization or pruning.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "foldkit/coloring.hpp"
#include "foldkit/fold.hpp"
#include "foldkit/graph.hpp"

namespace oracles {

// graph6 decoder working on a string of '0'/'1' characters.
inline foldkit::Graph ref_parse_graph6(const std::string& line) {
  auto sextet_bits = [](char c) {
    int v = static_cast<unsigned char>(c) - 63;
    std::string bits;
    for (int shift = 5; shift >= 0; --shift) bits += (v >> shift & 1) ? '1' : '0';
    return bits;
  };
  std::size_t pos = 0;
  int n = 0;
  if (line.at(0) == '~') {
    n = (static_cast<unsigned char>(line.at(1)) - 63) * 64 * 64 +
        (static_cast<unsigned char>(line.at(2)) - 63) * 64 +
        (static_cast<unsigned char>(line.at(3)) - 63);
    pos = 4;
  } else {
    n = static_cast<unsigned char>(line.at(0)) - 63;
    pos = 1;
  }
  std::string bits;
  for (std::size_t i = pos; i < line.size(); ++i) bits += sextet_bits(line[i]);
  foldkit::Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bits.at(k) == '1') g.add_edge(i, j);
    }
  }
  return g;
}

// Smallest k admitting a proper coloring, by odometer over assignments.
inline int naive_chi(const foldkit::Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  auto edges = g.edges();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> a(n, 0);
    for (;;) {
      bool proper = true;
      for (auto [u, v] : edges) {
        if (a[u] == a[v]) {
          proper = false;
          break;
        }
      }
      if (proper) return k;
      int i = 0;
      while (i < n && ++a[i] == k) a[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

// Largest k admitting a proper complete coloring, by odometer over all
// surjective assignments.
inline int naive_psi(const foldkit::Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  auto edges = g.edges();
  int best = 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> a(n, 0);
    for (;;) {
      bool proper = true;
      for (auto [u, v] : edges) {
        if (a[u] == a[v]) {
          proper = false;
          break;
        }
      }
      if (proper) {
        std::vector<bool> used(k, false);
        for (int c : a) used[c] = true;
        bool surjective = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
        if (surjective) {
          std::vector<std::vector<bool>> covered(k, std::vector<bool>(k, false));
          for (auto [u, v] : edges) covered[a[u]][a[v]] = covered[a[v]][a[u]] = true;
          bool complete = true;
          for (int x = 0; x < k && complete; ++x) {
            for (int y = x + 1; y < k && complete; ++y) complete = covered[x][y];
          }
          if (complete) {
            best = std::max(best, k);
            break;  // one witness per k is enough
          }
        }
      }
      int i = 0;
      while (i < n && ++a[i] == k) a[i++] = 0;
      if (i == n) break;
    }
  }
  return best;
}

// Largest clique reachable by simple folds: the full fold tree, no
// memoization, no pruning.
inline int naive_sigma(const foldkit::Graph& g) {
  int best = foldkit::is_clique(g) ? g.vertex_count() : 0;
  for (foldkit::FoldStep step : foldkit::fold_candidates(g)) {
    best = std::max(best, naive_sigma(foldkit::simple_fold(g, step.x, step.y)));
  }
  return best;
}

// Clique sizes at the leaves of every maximal fold sequence.
inline void all_maximal_targets(const foldkit::Graph& g, std::vector<foldkit::Graph>& out) {
  auto candidates = foldkit::fold_candidates(g);
  if (candidates.empty()) {
    out.push_back(g);
    return;
  }
  for (foldkit::FoldStep step : candidates) {
    all_maximal_targets(foldkit::simple_fold(g, step.x, step.y), out);
  }
}

// Isomorphism by trying every relabeling.
inline bool brute_isomorphic(const foldkit::Graph& a, const foldkit::Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  int n = a.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.permuted(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Isomorphism-class count over all edge subsets, deduplicating by pairwise
// brute-force isomorphism only. Usable for n <= 4.
inline int count_classes_pairwise(int n, bool connected_only) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<foldkit::Graph> reps;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    foldkit::Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    }
    if (connected_only && !foldkit::is_connected(g)) continue;
    bool fresh = true;
    for (const foldkit::Graph& r : reps) {
      if (brute_isomorphic(r, g)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(g);
  }
  return static_cast<int>(reps.size());
}

}  // namespace oracles
