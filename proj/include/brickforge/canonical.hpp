#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "brickforge/graph.hpp"

namespace brickforge {

/// Exact isomorphism key: equal iff the graphs are isomorphic.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalResult {
  CanonicalForm form;
  /// labeling[v] is the canonical position of vertex v.
  std::vector<VertexId> labeling;
};

CanonicalResult canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// The canonically relabeled graph; isomorphic inputs yield identical graphs.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace brickforge

template <>
struct std::hash<brickforge::CanonicalForm> {
  std::size_t operator()(const brickforge::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes);
  }
};
