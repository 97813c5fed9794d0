#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "brickforge/graph.hpp"

namespace brickforge::testing {

inline Graph cycle(int n) {
  Graph g(static_cast<std::size_t>(n));
  for (VertexId i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path(int n) {
  Graph g(static_cast<std::size_t>(n));
  for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(static_cast<std::size_t>(n));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(static_cast<std::size_t>(a + b));
  for (VertexId u = 0; u < a; ++u) {
    for (VertexId v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

/// The labelled graph on n vertices whose edge set is selected by `mask` over all_pairs(n).
inline Graph from_mask(int n, std::uint64_t mask) {
  const auto pairs = all_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1u) edges.push_back(pairs[i]);
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(static_cast<std::size_t>(n));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<VertexId> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Brute-force isomorphism key: the lexicographically smallest adjacency
/// string over all n! relabellings.
inline std::string brute_force_key(const Graph& g) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key(static_cast<std::size_t>(n * n), '0');
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v : g.neighbors(u)) key[static_cast<std::size_t>(perm[u] * n + perm[v])] = '1';
    }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace brickforge::testing
