#pragma once

#include <optional>
#include <span>
#include <vector>

#include "brickforge/graph.hpp"

namespace brickforge {

struct Matching {
  std::vector<Edge> edges;
};

/// Vertex-disjoint edges of g.
bool is_matching(const Graph& g, const Matching& m);
/// A matching covering every vertex.
bool is_perfect_matching(const Graph& g, const Matching& m);

/// Maximum-cardinality matching (Edmonds' blossom algorithm).
Matching maximum_matching(const Graph& g);

/// A perfect matching of g, or nullopt. Odd order returns nullopt immediately.
std::optional<Matching> find_perfect_matching(const Graph& g);
bool has_perfect_matching(const Graph& g);

/// Does g minus `removed` have a perfect matching? Avoids copying the graph;
/// this is the hot path of the bicriticality test.
bool has_perfect_matching_without(const Graph& g, std::span<const VertexId> removed);

/// Does g - a - b have a perfect matching that does not use `forbidden`?
/// A forbidden edge absent from g is ignored. Throws SameVertex if a == b.
bool has_pm_avoiding(const Graph& g, Edge forbidden, VertexId a, VertexId b);

/// Exhaustive search over matchings; validation oracle only. Throws TooLarge for n > 16.
bool brute_force_pm(const Graph& g);

}  // namespace brickforge
