#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace brickforge {

using VertexId = std::int32_t;

/// Marks a vertex that no longer exists in a remap table.
inline constexpr VertexId kRemoved = -1;

/// Undirected edge, stored with `u < v`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over dense ids `0..n-1` with sorted adjacency lists.
///
/// Mutators throw `Error` and leave the graph unchanged on failure. The free
/// functions below (`with_edge`, `without_vertex`, ...) are the pure versions.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges);

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return m_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(VertexId v) const { return adj_.at(static_cast<std::size_t>(v)).size(); }
  bool has_vertex(VertexId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < adj_.size();
  }
  bool has_edge(VertexId u, VertexId v) const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  VertexId add_vertex();
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);

  /// Throws InternalCheckFailed unless the graph is simple and symmetric.
  void validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void require_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> adj_;
  std::size_t m_ = 0;
};

/// Old id -> new id, `kRemoved` for deleted vertices.
using Remap = std::vector<VertexId>;

Graph with_edge(const Graph& g, VertexId u, VertexId v);
Graph without_edge(const Graph& g, VertexId u, VertexId v);

/// Deletes vertices and compacts ids; surviving vertices keep their relative order.
std::pair<Graph, Remap> without_vertices(const Graph& g, std::span<const VertexId> vertices);
std::pair<Graph, Remap> without_vertex(const Graph& g, VertexId v);

/// Returns the graph with vertex `v` renamed to `perm[v]`; `perm` must be a permutation.
Graph relabel(const Graph& g, std::span<const VertexId> perm);

bool is_connected(const Graph& g);

}  // namespace brickforge
