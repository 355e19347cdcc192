#include "foldkit/families.hpp"

#include <unordered_set>
#include <utility>

#include "foldkit/canonical.hpp"
#include "foldkit/errors.hpp"

namespace foldkit {

namespace {

void require_min(const char* family, int n, int min) {
  if (n < min) {
    throw PreconditionError(std::string("family ") + family + " requires n >= " +
                            std::to_string(min) + ", got " + std::to_string(n));
  }
}

}  // namespace

Graph make_path(int n) {
  require_min("path", n, 1);
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int n) {
  require_min("cycle", n, 3);
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_complete(int n) {
  require_min("complete", n, 1);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph make_star(int n) {
  require_min("star", n, 1);
  return add_universal(Graph(n));
}

Graph make_wheel(int n) {
  require_min("wheel", n, 3);
  return add_universal(make_cycle(n));
}

Graph make_fan(int n) {
  require_min("fan", n, 1);
  return add_universal(make_path(n));
}

Graph generate(const Family& f) {
  switch (f.kind) {
    case FamilyKind::path: return make_path(f.n);
    case FamilyKind::cycle: return make_cycle(f.n);
    case FamilyKind::complete: return make_complete(f.n);
    case FamilyKind::star: return make_star(f.n);
    case FamilyKind::wheel: return make_wheel(f.n);
    case FamilyKind::fan: return make_fan(f.n);
  }
  throw PreconditionError("unknown family kind");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int na = a.vertex_count();
  Graph g(na + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  int na = a.vertex_count();
  for (int u = 0; u < na; ++u) {
    for (int v = 0; v < b.vertex_count(); ++v) g.add_edge(u, na + v);
  }
  return g;
}

Graph add_universal(const Graph& g) { return join(g, Graph(1)); }

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::star: return "star";
    case FamilyKind::wheel: return "wheel";
    case FamilyKind::fan: return "fan";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("family: expected \"kind:N\", got \"" + text + "\"");
  }
  std::string kind = text.substr(0, colon);
  std::string num = text.substr(colon + 1);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(num, &used);
    if (used != num.size()) throw std::invalid_argument(num);
  } catch (const std::exception&) {
    throw ParseError("family: bad size \"" + num + "\"");
  }
  for (FamilyKind k : {FamilyKind::path, FamilyKind::cycle, FamilyKind::complete,
                       FamilyKind::star, FamilyKind::wheel, FamilyKind::fan}) {
    if (family_name(k) == kind) return Family{k, n};
  }
  throw ParseError("family: unknown kind \"" + kind + "\"");
}

namespace {

std::vector<Graph> enumerate_impl(int n, bool connected_only) {
  if (n < 1 || n > 7) {
    throw PreconditionError("enumeration supports 1..7 vertices, got " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::unordered_set<std::string> seen;
  std::vector<Graph> out;
  std::uint32_t limit = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    }
    // Every isomorphism class has a labeling with non-increasing degrees,
    // so other labelings can be skipped before canonicalizing.
    bool sorted = true;
    for (int v = 0; v + 1 < n && sorted; ++v) sorted = g.degree(v) >= g.degree(v + 1);
    if (!sorted) continue;
    if (connected_only && !is_connected(g)) continue;
    if (seen.insert(canonical_key(g).bytes).second) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) { return enumerate_impl(n, true); }

std::vector<Graph> enumerate_graphs(int n) { return enumerate_impl(n, false); }

}  // namespace foldkit
