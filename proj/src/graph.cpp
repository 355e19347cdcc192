#include "foldkit/graph.hpp"

#include <bit>
#include <string>

#include "foldkit/errors.hpp"

namespace foldkit {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n < 0 ? 0 : n), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw PreconditionError("graph size " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxVertices));
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(n_ - 1));
  }
}

int Graph::edge_count() const {
  int total = 0;
  for (auto row : rows_) total += std::popcount(row);
  return total / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u] >> v & 1;
}

std::uint64_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  return rows_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(rows_[v]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = rows_[u] >> (u + 1) << (u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph Graph::permuted(const std::vector<int>& new_label) const {
  if (static_cast<int>(new_label.size()) != n_) {
    throw PreconditionError("permutation size mismatch");
  }
  Graph out(n_);
  for (auto [u, v] : edges()) out.add_edge(new_label[u], new_label[v]);
  return out;
}

Graph Graph::induced(std::uint64_t mask) const {
  std::vector<int> keep;
  for (int v = 0; v < n_; ++v) {
    if (mask >> v & 1) keep.push_back(v);
  }
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

std::uint64_t Graph::full_mask() const {
  return n_ == kMaxVertices ? ~std::uint64_t{0} : bit(n_) - 1;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  if (u == v) {
    g.neighbor_mask(u);  // range check
    return 0;
  }
  std::uint64_t visited = bit(u);
  std::uint64_t frontier = visited;
  g.neighbor_mask(v);  // range check
  int hops = 0;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int w = std::countr_zero(frontier);
      next |= g.neighbor_mask(w);
      frontier &= frontier - 1;
    }
    next &= ~visited;
    ++hops;
    if (next >> v & 1) return hops;
    visited |= next;
    frontier = next;
  }
  return std::nullopt;
}

namespace {

std::uint64_t reach_from(const Graph& g, int start) {
  std::uint64_t visited = bit(start);
  std::uint64_t frontier = visited;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int w = std::countr_zero(frontier);
      next |= g.neighbor_mask(w);
      frontier &= frontier - 1;
    }
    next &= ~visited;
    visited |= next;
    frontier = next;
  }
  return visited;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return reach_from(g, 0) == g.full_mask();
}

bool is_clique(const Graph& g) {
  std::uint64_t all = g.full_mask();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbor_mask(v) != (all & ~bit(v))) return false;
  }
  return true;
}

std::vector<std::uint64_t> components(const Graph& g) {
  std::vector<std::uint64_t> out;
  std::uint64_t remaining = g.full_mask();
  while (remaining) {
    int v = std::countr_zero(remaining);
    std::uint64_t comp = reach_from(g, v);
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

std::optional<int> universal_vertex(const Graph& g) {
  std::uint64_t all = g.full_mask();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbor_mask(v) == (all & ~bit(v))) return v;
  }
  return std::nullopt;
}

}  // namespace foldkit
