#include "foldkit/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "foldkit/errors.hpp"
#include "foldkit/graph_io.hpp"

namespace foldkit {

namespace {

// Minimizes the relabeled adjacency upper triangle, read in graph6 column
// order (0,1),(0,2),(1,2),(0,3),..., over all vertex permutations. Placing
// the vertex for position k fixes column k completely, so the search
// branches over partial placements and prunes any branch whose column
// exceeds the best known value at that position. Every permutation is
// reachable through the search tree, which makes the minimum exact.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> chosen;                 // chosen[k] = old label at position k
  std::vector<std::uint64_t> best_cols;    // minimal column values found so far
  std::vector<int> best_perm;
  std::uint64_t used = 0;

  explicit CanonSearch(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        chosen(n, -1),
        best_cols(n, ~std::uint64_t{0}),
        best_perm(n, -1) {}

  // Column k of candidate `cand`: bit (k-1-i) holds adjacency to chosen[i],
  // so larger integer means lexicographically larger column.
  std::uint64_t column_value(int cand, int k) const {
    std::uint64_t col = 0;
    for (int i = 0; i < k; ++i) col = col << 1 | (g.neighbor_mask(chosen[i]) >> cand & 1);
    return col;
  }

  void dfs(int k) {
    if (k == n) {
      // Every level either matched best_cols or lowered it, so this
      // placement realizes the current minimum.
      best_perm = chosen;
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used >> cand & 1) continue;
      std::uint64_t col = column_value(cand, k);
      if (col > best_cols[k]) continue;
      if (col < best_cols[k]) {
        best_cols[k] = col;
        std::fill(best_cols.begin() + k + 1, best_cols.end(), ~std::uint64_t{0});
      }
      chosen[k] = cand;
      used |= std::uint64_t{1} << cand;
      dfs(k + 1);
      used &= ~(std::uint64_t{1} << cand);
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return g;
  CanonSearch search(g);
  search.dfs(0);
  std::vector<int> new_label(n);
  for (int k = 0; k < n; ++k) new_label[search.best_perm[k]] = k;
  return g.permuted(new_label);
}

std::optional<CanonicalKey> try_canonical_key(const Graph& g, int limit) {
  if (g.vertex_count() > limit) return std::nullopt;
  return CanonicalKey{emit_graph6(canonical_form(g))};
}

CanonicalKey canonical_key(const Graph& g, int limit) {
  auto key = try_canonical_key(g, limit);
  if (!key) {
    throw PreconditionError("canonical key: " + std::to_string(g.vertex_count()) +
                            " vertices, too large to canonicalize (limit " +
                            std::to_string(limit) + ")");
  }
  return *key;
}

}  // namespace foldkit
