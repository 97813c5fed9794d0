#include "brickforge/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>

namespace brickforge {
namespace {

using Cells = std::vector<std::vector<VertexId>>;
using Certificate = std::vector<std::uint64_t>;

// Equitable refinement. Every decision depends only on the cell structure and
// neighbor counts, never on vertex labels, so the result is isomorphism-invariant.
void refine(const Graph& g, Cells& cells) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> cell_of(n);
  auto reindex = [&] {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (VertexId v : cells[c]) cell_of[static_cast<std::size_t>(v)] = c;
    }
  };
  reindex();
  std::vector<int> count(n, 0);
  bool changed = true;
  while (changed && cells.size() < n) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      std::fill(count.begin(), count.end(), 0);
      for (VertexId v : cells[s]) {
        for (VertexId w : g.neighbors(v)) ++count[static_cast<std::size_t>(w)];
      }
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto& cell = cells[c];
        if (cell.size() < 2) continue;
        int c0 = count[static_cast<std::size_t>(cell[0])];
        bool uniform = std::all_of(cell.begin(), cell.end(),
                                   [&](VertexId v) { return count[static_cast<std::size_t>(v)] == c0; });
        if (uniform) continue;
        std::stable_sort(cell.begin(), cell.end(), [&](VertexId a, VertexId b) {
          return count[static_cast<std::size_t>(a)] < count[static_cast<std::size_t>(b)];
        });
        Cells pieces;
        for (std::size_t i = 0; i < cell.size(); ++i) {
          if (i == 0 || count[static_cast<std::size_t>(cell[i])] != count[static_cast<std::size_t>(cell[i - 1])]) {
            pieces.emplace_back();
          }
          pieces.back().push_back(cell[i]);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        reindex();
        changed = true;
        break;
      }
    }
  }
}

Certificate certificate(const Graph& g, const std::vector<VertexId>& order) {
  // order[i] = vertex placed at position i; bits of the relabeled upper triangle.
  const std::size_t n = order.size();
  std::vector<VertexId> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<VertexId>(i);
  Certificate cert((n * n + 63) / 64, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (VertexId w : g.neighbors(order[i])) {
      std::size_t j = static_cast<std::size_t>(pos[static_cast<std::size_t>(w)]);
      std::size_t bit = i * n + j;
      cert[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
    }
  }
  return cert;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g) {}

  void run() {
    Cells cells;
    if (g_.num_vertices() > 0) {
      // Initial partition by degree, ascending.
      std::vector<VertexId> all(g_.num_vertices());
      std::iota(all.begin(), all.end(), 0);
      std::stable_sort(all.begin(), all.end(), [&](VertexId a, VertexId b) { return g_.degree(a) < g_.degree(b); });
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (i == 0 || g_.degree(all[i]) != g_.degree(all[i - 1])) cells.emplace_back();
        cells.back().push_back(all[i]);
      }
    }
    std::vector<VertexId> prefix;
    descend(std::move(cells), prefix);
  }

  const Certificate& best() const { return *best_; }
  const std::vector<VertexId>& best_order() const { return best_order_; }

 private:
  void descend(Cells cells, std::vector<VertexId>& prefix) {
    refine(g_, cells);
    if (cells.size() == g_.num_vertices()) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    std::size_t target_size = g_.num_vertices() + 1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && cells[c].size() < target_size) {
        target = c;
        target_size = cells[c].size();
      }
    }
    std::vector<VertexId> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());
    std::vector<VertexId> tried;
    for (VertexId v : candidates) {
      if (equivalent_to_tried(v, tried, prefix)) continue;
      tried.push_back(v);
      Cells child = cells;
      auto& cell = child[target];
      cell.erase(std::find(cell.begin(), cell.end(), v));
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), std::vector<VertexId>{v});
      prefix.push_back(v);
      descend(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  // True if some automorphism fixing `prefix` pointwise maps a tried vertex onto v.
  bool equivalent_to_tried(VertexId v, const std::vector<VertexId>& tried,
                           const std::vector<VertexId>& prefix) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    const std::size_t n = g_.num_vertices();
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& aut : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](VertexId p) { return aut[static_cast<std::size_t>(p)] == p; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < n; ++x) {
        VertexId a = find(static_cast<VertexId>(x));
        VertexId b = find(aut[x]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    VertexId root = find(v);
    return std::any_of(tried.begin(), tried.end(), [&](VertexId t) { return find(t) == root; });
  }

  void leaf(const Cells& cells) {
    std::vector<VertexId> order;
    order.reserve(cells.size());
    for (const auto& c : cells) order.push_back(c[0]);
    Certificate cert = certificate(g_, order);
    if (!best_ || cert < *best_) {
      best_ = std::move(cert);
      best_order_ = std::move(order);
    } else if (cert == *best_) {
      // Same relabeled graph: order -> best_order_ position-wise is an automorphism.
      std::vector<VertexId> aut(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) aut[static_cast<std::size_t>(order[i])] = best_order_[i];
      automorphisms_.push_back(std::move(aut));
    }
  }

  const Graph& g_;
  std::optional<Certificate> best_;
  std::vector<VertexId> best_order_;
  std::vector<std::vector<VertexId>> automorphisms_;
};

}  // namespace

CanonicalResult canonical_labeling(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Search search(g);
  search.run();
  CanonicalResult result;
  result.labeling.assign(n, 0);
  std::string bytes;
  for (int shift = 24; shift >= 0; shift -= 8) bytes += static_cast<char>((n >> shift) & 0xff);
  if (n > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      result.labeling[static_cast<std::size_t>(search.best_order()[i])] = static_cast<VertexId>(i);
    }
    for (std::uint64_t word : search.best()) {
      for (int shift = 56; shift >= 0; shift -= 8) bytes += static_cast<char>((word >> shift) & 0xff);
    }
  }
  result.form.bytes = std::move(bytes);
  return result;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g).labeling); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace brickforge
