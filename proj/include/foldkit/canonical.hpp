#pragma once

#include <compare>
#include <optional>
#include <string>

#include "foldkit/graph.hpp"

namespace foldkit {

inline constexpr int kDefaultCanonLimit = 12;

// Label-invariant fingerprint: the graph6 encoding of the canonical
// relabeling. Equal keys if and only if the graphs are isomorphic.
struct CanonicalKey {
  std::string bytes;

  auto operator<=>(const CanonicalKey&) const = default;
};

// nullopt when g has more vertices than limit; callers fall back to
// non-deduplicated search in that case.
std::optional<CanonicalKey> try_canonical_key(const Graph& g, int limit = kDefaultCanonLimit);

// Throwing form of try_canonical_key.
CanonicalKey canonical_key(const Graph& g, int limit = kDefaultCanonLimit);

// The canonically relabeled graph itself (used for key construction and by
// tests that want the representative rather than its encoding).
Graph canonical_form(const Graph& g);

}  // namespace foldkit
