#include "foldkit/threshold.hpp"

#include <algorithm>
#include <bit>

#include "foldkit/errors.hpp"

namespace foldkit {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph realize(const CreationSequence& seq) {
  Graph g(static_cast<int>(seq.size()));
  for (std::size_t v = 0; v < seq.size(); ++v) {
    if (seq[v] == CreationOp::AddUniversal) {
      for (std::size_t u = 0; u < v; ++u) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return g;
}

CreationSequence parse_creation_sequence(const std::string& text) {
  CreationSequence seq;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'i': seq.push_back(CreationOp::AddIsolated); break;
      case 'u': seq.push_back(CreationOp::AddUniversal); break;
      default:
        throw ParseError("creation sequence: character '" + std::string(1, text[i]) +
                         "' at position " + std::to_string(i) + ", expected i or u");
    }
  }
  return seq;
}

std::string format_creation_sequence(const CreationSequence& seq) {
  std::string out;
  for (CreationOp op : seq) out += op == CreationOp::AddIsolated ? 'i' : 'u';
  return out;
}

std::string forbidden_name(ForbiddenSubgraph::Kind kind) {
  switch (kind) {
    case ForbiddenSubgraph::Kind::P4: return "P4";
    case ForbiddenSubgraph::Kind::C4: return "C4";
    case ForbiddenSubgraph::Kind::TwoK2: return "2K2";
  }
  return "?";
}

namespace {

// Classifies the induced subgraph on four vertices by edge count and degree
// multiset: P4 = 3 edges with degrees {1,1,2,2}, C4 = 4 edges all degree 2,
// 2K2 = 2 edges all degree 1.
std::optional<ForbiddenSubgraph::Kind> classify_quad(const Graph& g, const std::array<int, 4>& q,
                                                     bool include_2k2) {
  int deg[4] = {0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.has_edge(q[i], q[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
    }
  }
  int sorted[4] = {deg[0], deg[1], deg[2], deg[3]};
  std::sort(sorted, sorted + 4);
  if (edges == 3 && sorted[0] == 1 && sorted[1] == 1 && sorted[2] == 2 && sorted[3] == 2) {
    return ForbiddenSubgraph::Kind::P4;
  }
  if (edges == 4 && sorted[0] == 2 && sorted[3] == 2) {
    return ForbiddenSubgraph::Kind::C4;
  }
  if (include_2k2 && edges == 2 && sorted[0] == 1 && sorted[3] == 1) {
    return ForbiddenSubgraph::Kind::TwoK2;
  }
  return std::nullopt;
}

std::optional<ForbiddenSubgraph> find_forbidden(const Graph& g, bool include_2k2) {
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          std::array<int, 4> q{a, b, c, d};
          if (auto kind = classify_quad(g, q, include_2k2)) {
            return ForbiddenSubgraph{*kind, q};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ThresholdCheck is_threshold(const Graph& g) {
  std::uint64_t mask = g.full_mask();
  CreationSequence peeled;  // last-added first
  while (mask) {
    int size = std::popcount(mask);
    if (size == 1) {
      peeled.push_back(CreationOp::AddIsolated);  // first-vertex convention
      break;
    }
    int pick = -1;
    CreationOp op = CreationOp::AddIsolated;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if ((g.neighbor_mask(v) & mask) == (mask & ~bit(v))) {
        pick = v;
        op = CreationOp::AddUniversal;
        break;
      }
    }
    if (pick < 0) {
      for (std::uint64_t m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if ((g.neighbor_mask(v) & mask) == 0) {
          pick = v;
          op = CreationOp::AddIsolated;
          break;
        }
      }
    }
    if (pick < 0) {
      auto witness = find_forbidden(g, true);
      if (!witness) throw Error("is_threshold: peel stuck without forbidden subgraph");
      return {std::nullopt, witness};
    }
    peeled.push_back(op);
    mask &= ~bit(pick);
  }
  std::reverse(peeled.begin(), peeled.end());
  return {std::move(peeled), std::nullopt};
}

TriviallyPerfectCheck is_trivially_perfect(const Graph& g) {
  if (auto witness = find_forbidden(g, false)) return {false, witness};
  return {true, std::nullopt};
}

int psi_threshold(const CreationSequence& seq) {
  if (seq.empty()) return 0;
  int value = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    value = seq[i] == CreationOp::AddUniversal ? value + 1 : std::max(1, value);
  }
  return value;
}

std::optional<std::pair<int, Graph>> reduce_universal(const Graph& g) {
  auto u = universal_vertex(g);
  if (!u) return std::nullopt;
  return std::make_pair(*u, g.induced(g.full_mask() & ~bit(*u)));
}

MarcuBound marcu_min_length(int psi) {
  if (psi < 1) throw PreconditionError("marcu_min_length: psi must be >= 1");
  int min_n = psi % 2 == 1 ? psi * (psi - 1) / 2 : psi * psi / 2;
  return {psi, min_n};
}

int psi_cycle_upper(int n) {
  int best = 1;
  while (marcu_min_length(best + 1).min_n <= n) ++best;
  return best;
}

}  // namespace foldkit
