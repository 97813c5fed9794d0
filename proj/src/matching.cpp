#include "brickforge/matching.hpp"

#include <cstdint>
#include <deque>
#include <string>

#include "brickforge/error.hpp"

namespace brickforge {
namespace {

constexpr VertexId kNone = -1;

// Edmonds' augmenting-path search with blossom contraction over the vertices
// marked alive; O(n^3) per full matching.
class BlossomMatcher {
 public:
  BlossomMatcher(const Graph& g, std::vector<char> alive)
      : g_(g),
        n_(g.num_vertices()),
        alive_(std::move(alive)),
        match_(n_, kNone),
        parent_(n_, kNone),
        base_(n_),
        used_(n_, 0),
        in_blossom_(n_, 0),
        lca_mark_(n_, 0) {}

  // Returns false as soon as some alive vertex provably stays exposed, if `stop_on_exposed`.
  bool run(bool stop_on_exposed) {
    greedy_init();
    for (std::size_t v = 0; v < n_; ++v) {
      if (!alive_[v] || match_[v] != kNone) continue;
      VertexId end = find_path(static_cast<VertexId>(v));
      if (end == kNone) {
        if (stop_on_exposed) return false;
        continue;
      }
      augment(end);
    }
    return true;
  }

  Matching matching() const {
    Matching m;
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != kNone && static_cast<std::size_t>(match_[v]) > v) {
        m.edges.emplace_back(static_cast<VertexId>(v), match_[v]);
      }
    }
    return m;
  }

 private:
  bool alive(VertexId v) const { return alive_[static_cast<std::size_t>(v)] != 0; }

  void greedy_init() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (!alive_[v] || match_[v] != kNone) continue;
      for (VertexId w : g_.neighbors(static_cast<VertexId>(v))) {
        if (alive(w) && match_[static_cast<std::size_t>(w)] == kNone) {
          match_[v] = w;
          match_[static_cast<std::size_t>(w)] = static_cast<VertexId>(v);
          break;
        }
      }
    }
  }

  VertexId lca(VertexId a, VertexId b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    while (true) {
      a = base_[static_cast<std::size_t>(a)];
      lca_mark_[static_cast<std::size_t>(a)] = 1;
      if (match_[static_cast<std::size_t>(a)] == kNone) break;
      a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
    }
    while (true) {
      b = base_[static_cast<std::size_t>(b)];
      if (lca_mark_[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      VertexId mv = match_[static_cast<std::size_t>(v)];
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  VertexId find_path(VertexId root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<VertexId>(i);
    used_[static_cast<std::size_t>(root)] = 1;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId to : g_.neighbors(v)) {
        if (!alive(to)) continue;
        const auto ti = static_cast<std::size_t>(to);
        if (base_[static_cast<std::size_t>(v)] == base_[ti] || match_[static_cast<std::size_t>(v)] == to) continue;
        if (to == root || (match_[ti] != kNone && parent_[static_cast<std::size_t>(match_[ti])] != kNone)) {
          VertexId cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (alive_[i] && in_blossom_[static_cast<std::size_t>(base_[i])]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(static_cast<VertexId>(i));
              }
            }
          }
        } else if (parent_[ti] == kNone) {
          parent_[ti] = v;
          if (match_[ti] == kNone) return to;
          VertexId next = match_[ti];
          used_[static_cast<std::size_t>(next)] = 1;
          queue.push_back(next);
        }
      }
    }
    return kNone;
  }

  void augment(VertexId v) {
    while (v != kNone) {
      VertexId pv = parent_[static_cast<std::size_t>(v)];
      VertexId ppv = match_[static_cast<std::size_t>(pv)];
      match_[static_cast<std::size_t>(v)] = pv;
      match_[static_cast<std::size_t>(pv)] = v;
      v = ppv;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<char> alive_;
  std::vector<VertexId> match_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
  std::vector<char> lca_mark_;
};

bool brute_force_from(const Graph& g, std::vector<char>& covered, std::size_t first_free) {
  const std::size_t n = g.num_vertices();
  while (first_free < n && covered[first_free]) ++first_free;
  if (first_free == n) return true;
  covered[first_free] = 1;
  for (VertexId w : g.neighbors(static_cast<VertexId>(first_free))) {
    auto wi = static_cast<std::size_t>(w);
    if (covered[wi]) continue;
    covered[wi] = 1;
    bool ok = brute_force_from(g, covered, first_free + 1);
    covered[wi] = 0;
    if (ok) {
      covered[first_free] = 0;
      return true;
    }
  }
  covered[first_free] = 0;
  return false;
}

}  // namespace

bool is_matching(const Graph& g, const Matching& m) {
  std::vector<char> seen(g.num_vertices(), 0);
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    for (VertexId x : {e.u, e.v}) {
      if (seen[static_cast<std::size_t>(x)]) return false;
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
  return true;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  return is_matching(g, m) && 2 * m.edges.size() == g.num_vertices();
}

Matching maximum_matching(const Graph& g) {
  BlossomMatcher matcher(g, std::vector<char>(g.num_vertices(), 1));
  matcher.run(false);
  return matcher.matching();
}

std::optional<Matching> find_perfect_matching(const Graph& g) {
  if (g.num_vertices() % 2 != 0) return std::nullopt;
  BlossomMatcher matcher(g, std::vector<char>(g.num_vertices(), 1));
  if (!matcher.run(true)) return std::nullopt;
  return matcher.matching();
}

bool has_perfect_matching(const Graph& g) { return find_perfect_matching(g).has_value(); }

bool has_perfect_matching_without(const Graph& g, std::span<const VertexId> removed) {
  std::vector<char> alive(g.num_vertices(), 1);
  std::size_t alive_count = g.num_vertices();
  for (VertexId v : removed) {
    auto& flag = alive.at(static_cast<std::size_t>(v));
    if (flag) --alive_count;
    flag = 0;
  }
  if (alive_count % 2 != 0) return false;
  BlossomMatcher matcher(g, std::move(alive));
  return matcher.run(true);
}

bool has_pm_avoiding(const Graph& g, Edge forbidden, VertexId a, VertexId b) {
  if (a == b) throw Error(ErrorKind::SameVertex, "removed vertices must be distinct (" + std::to_string(a) + ")");
  if (!g.has_vertex(a) || !g.has_vertex(b)) throw Error(ErrorKind::MissingVertex, "removed vertex out of range");
  Graph h = g;
  if (h.has_edge(forbidden.u, forbidden.v)) h.remove_edge(forbidden.u, forbidden.v);
  const VertexId removed[] = {a, b};
  return has_perfect_matching(without_vertices(h, removed).first);
}

bool brute_force_pm(const Graph& g) {
  if (g.num_vertices() > 16) {
    throw Error(ErrorKind::TooLarge, "brute_force_pm supports n <= 16, got " + std::to_string(g.num_vertices()));
  }
  if (g.num_vertices() % 2 != 0) return false;
  std::vector<char> covered(g.num_vertices(), 0);
  return brute_force_from(g, covered, 0);
}

}  // namespace brickforge
