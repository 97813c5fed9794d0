#include "brickforge/graph.hpp"

#include <algorithm>
#include <string>

#include "brickforge/error.hpp"

namespace brickforge {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) : adj_(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) {
    throw Error(ErrorKind::MissingVertex,
                "vertex " + std::to_string(v) + " not in 0.." + std::to_string(adj_.size()));
  }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (VertexId v : adj_[u]) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<VertexId>(u), v);
    }
  }
  return out;
}

VertexId Graph::add_vertex() {
  adj_.emplace_back();
  return static_cast<VertexId>(adj_.size() - 1);
}

void Graph::add_edge(VertexId u, VertexId v) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw Error(ErrorKind::LoopEdge, "loop at " + std::to_string(u));
  auto& a = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) {
    throw Error(ErrorKind::DuplicateEdge,
                "edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
  }
  a.insert(it, v);
  auto& b = adj_[static_cast<std::size_t>(v)];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++m_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
  if (!has_edge(u, v)) {
    throw Error(ErrorKind::MissingEdge, "edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  auto& a = adj_[static_cast<std::size_t>(u)];
  a.erase(std::lower_bound(a.begin(), a.end(), v));
  auto& b = adj_[static_cast<std::size_t>(v)];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --m_;
}

void Graph::validate() const {
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    const auto& a = adj_[u];
    degree_sum += a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      VertexId v = a[i];
      if (!has_vertex(v)) throw Error(ErrorKind::InternalCheckFailed, "neighbor out of range");
      if (static_cast<std::size_t>(v) == u) throw Error(ErrorKind::InternalCheckFailed, "loop");
      if (i > 0 && a[i - 1] >= v) throw Error(ErrorKind::InternalCheckFailed, "adjacency not strictly sorted");
      if (!has_edge(v, static_cast<VertexId>(u))) {
        throw Error(ErrorKind::InternalCheckFailed, "asymmetric adjacency");
      }
    }
  }
  if (degree_sum != 2 * m_) throw Error(ErrorKind::InternalCheckFailed, "edge count mismatch");
}

Graph with_edge(const Graph& g, VertexId u, VertexId v) {
  Graph h = g;
  h.add_edge(u, v);
  return h;
}

Graph without_edge(const Graph& g, VertexId u, VertexId v) {
  Graph h = g;
  h.remove_edge(u, v);
  return h;
}

std::pair<Graph, Remap> without_vertices(const Graph& g, std::span<const VertexId> vertices) {
  const std::size_t n = g.num_vertices();
  Remap remap(n, 0);
  for (VertexId v : vertices) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::MissingVertex, "vertex " + std::to_string(v));
    remap[static_cast<std::size_t>(v)] = kRemoved;
  }
  VertexId next = 0;
  for (auto& r : remap) {
    if (r != kRemoved) r = next++;
  }
  Graph h(static_cast<std::size_t>(next));
  for (const Edge& e : g.edges()) {
    VertexId a = remap[static_cast<std::size_t>(e.u)];
    VertexId b = remap[static_cast<std::size_t>(e.v)];
    if (a != kRemoved && b != kRemoved) h.add_edge(a, b);
  }
  return {std::move(h), std::move(remap)};
}

std::pair<Graph, Remap> without_vertex(const Graph& g, VertexId v) {
  const VertexId one[] = {v};
  return without_vertices(g, one);
}

Graph relabel(const Graph& g, std::span<const VertexId> perm) {
  const std::size_t n = g.num_vertices();
  if (perm.size() != n) throw Error(ErrorKind::BadParameter, "permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (VertexId p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)]) {
      throw Error(ErrorKind::BadParameter, "not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  Graph h(n);
  for (const Edge& e : g.edges()) {
    h.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return h;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace brickforge
