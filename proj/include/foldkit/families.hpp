#pragma once

#include <string>
#include <vector>

#include "foldkit/graph.hpp"

namespace foldkit {

enum class FamilyKind { path, cycle, complete, star, wheel, fan };

// Parametric graph family. star(n), wheel(n) and fan(n) have n+1 vertices:
// a hub joined to an edgeless set, a cycle, or a path respectively.
struct Family {
  FamilyKind kind;
  int n;
};

Graph generate(const Family& f);

Graph make_path(int n);      // n >= 1
Graph make_cycle(int n);     // n >= 3
Graph make_complete(int n);  // n >= 1
Graph make_star(int n);      // n >= 1 leaves
Graph make_wheel(int n);     // n >= 3 rim vertices
Graph make_fan(int n);       // n >= 1 path vertices

Graph disjoint_union(const Graph& a, const Graph& b);

// Disjoint union plus all cross edges; b's labels are shifted up by a's size.
Graph join(const Graph& a, const Graph& b);

// join(g, K1): the new vertex gets label g.vertex_count().
Graph add_universal(const Graph& g);

// "kind:N", e.g. "cycle:9".
Family parse_family(const std::string& text);
std::string family_name(FamilyKind kind);

// One representative per isomorphism class, generated by running over all
// edge subsets and deduplicating on canonical keys. Supports n in 1..7.
std::vector<Graph> enumerate_connected(int n);
std::vector<Graph> enumerate_graphs(int n);  // disconnected classes included

}  // namespace foldkit
