#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace foldkit {

inline constexpr int kMaxVertices = 64;

// Simple undirected graph on labels 0..n-1. Adjacency is one 64-bit row per
// vertex, so n is capped at kMaxVertices. No loops, no multi-edges. Values
// are treated as immutable once built; all free functions below are pure.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const;

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  std::uint64_t neighbor_mask(int v) const;
  int degree(int v) const;

  // Edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  // New graph in which old vertex v carries label new_label[v].
  Graph permuted(const std::vector<int>& new_label) const;

  // Induced subgraph on the set bits of mask, labels compacted in order.
  Graph induced(std::uint64_t mask) const;

  std::uint64_t full_mask() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Shortest-path hop count; nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);

bool is_connected(const Graph& g);
bool is_clique(const Graph& g);

// Vertex sets of the connected components, ordered by lowest member.
std::vector<std::uint64_t> components(const Graph& g);

// Lowest-labeled vertex adjacent to all others, if any.
std::optional<int> universal_vertex(const Graph& g);

}  // namespace foldkit
