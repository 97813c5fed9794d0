#include "brickforge/extensions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <string>

#include "brickforge/error.hpp"

namespace brickforge {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void violated(const std::string& clause) { throw Error(ErrorKind::SpecInvariantViolated, clause); }

void require_vertex(const Graph& g, VertexId v, const char* name) {
  if (!g.has_vertex(v)) {
    throw Error(ErrorKind::MissingVertex, std::string(name) + "=" + std::to_string(v) + " is not a vertex");
  }
}

std::vector<VertexId> sorted(std::vector<VertexId> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

void check_partition(const Graph& g, const BisplitSpec& s) {
  require_vertex(g, s.vertex, "v");
  const auto nbrs = g.neighbors(s.vertex);
  std::set<VertexId> seen;
  for (const auto* side : {&s.side1, &s.side2}) {
    for (VertexId w : *side) {
      if (!std::binary_search(nbrs.begin(), nbrs.end(), w)) {
        throw Error(ErrorKind::BadPartition, std::to_string(w) + " is not a neighbour of " + std::to_string(s.vertex));
      }
      if (!seen.insert(w).second) {
        throw Error(ErrorKind::BadPartition, "neighbour " + std::to_string(w) + " listed twice");
      }
    }
  }
  if (seen.size() != nbrs.size()) {
    throw Error(ErrorKind::BadPartition, "sides do not cover the neighbourhood of " + std::to_string(s.vertex));
  }
  if (s.side1.size() < 2 || s.side2.size() < 2) {
    throw Error(ErrorKind::BadPartition, "each side needs at least two neighbours (sizes " +
                                             std::to_string(s.side1.size()) + "," + std::to_string(s.side2.size()) +
                                             ")");
  }
}

void check_degree(const Graph& g, VertexId v) {
  require_vertex(g, v, "v");
  if (g.degree(v) < 4) {
    throw Error(ErrorKind::DegreeTooLow,
                "bisplit vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + " < 4");
  }
}

// In-place bisplit: `vertex` keeps side1 and becomes v1; v2 and v0 are appended.
struct SplitIds {
  VertexId outer1, outer2, inner;
};

SplitIds split_in_place(Graph& g, VertexId vertex, const std::vector<VertexId>& side2) {
  for (VertexId w : side2) g.remove_edge(vertex, w);
  VertexId outer2 = g.add_vertex();
  VertexId inner = g.add_vertex();
  for (VertexId w : side2) g.add_edge(outer2, w);
  g.add_edge(inner, vertex);
  g.add_edge(inner, outer2);
  return {vertex, outer2, inner};
}

// Consumes fundament neighbour picks group by group.
class PickCursor {
 public:
  explicit PickCursor(const std::vector<VertexId>& picks) : picks_(picks) {}

  void take(std::size_t count, std::vector<VertexId> candidates, std::vector<VertexId>& into, const char* what) {
    std::sort(candidates.begin(), candidates.end());
    if (candidates.size() < count) {
      throw Error(ErrorKind::NeighborChoiceInfeasible,
                  std::string("not enough candidates for ") + what + " (need " + std::to_string(count) + ")");
    }
    if (picks_.empty()) {
      into.insert(into.end(), candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(count));
      return;
    }
    std::vector<VertexId> group;
    for (std::size_t i = 0; i < count; ++i) {
      if (pos_ >= picks_.size()) throw Error(ErrorKind::NeighborChoiceInfeasible, "too few explicit picks");
      VertexId p = picks_[pos_++];
      if (!std::binary_search(candidates.begin(), candidates.end(), p)) {
        throw Error(ErrorKind::NeighborChoiceInfeasible,
                    std::to_string(p) + " is not an admissible choice for " + what);
      }
      if (std::find(group.begin(), group.end(), p) != group.end()) {
        throw Error(ErrorKind::NeighborChoiceInfeasible, std::to_string(p) + " picked twice for " + what);
      }
      group.push_back(p);
    }
    into.insert(into.end(), group.begin(), group.end());
  }

  void finish() const {
    if (!picks_.empty() && pos_ != picks_.size()) {
      throw Error(ErrorKind::NeighborChoiceInfeasible, "too many explicit picks");
    }
  }

 private:
  const std::vector<VertexId>& picks_;
  std::size_t pos_ = 0;
};

std::vector<VertexId> without(std::vector<VertexId> xs, VertexId drop) {
  xs.erase(std::remove(xs.begin(), xs.end(), drop), xs.end());
  return xs;
}

}  // namespace

ExtensionKind kind_of(const ExtensionSpec& spec) { return static_cast<ExtensionKind>(spec.op.index()); }

ExtensionClass class_of(ExtensionKind kind) {
  switch (kind) {
    case ExtensionKind::Quasiquadratic: return ExtensionClass::Quadratic;
    case ExtensionKind::Quasiquartic: return ExtensionClass::Quartic;
    default: return ExtensionClass::Linear;
  }
}

std::string_view tag_of(ExtensionKind kind) {
  switch (kind) {
    case ExtensionKind::StrictLinear1: return "SL1";
    case ExtensionKind::StrictLinear2: return "SL2";
    case ExtensionKind::StrictLinear3: return "SL3";
    case ExtensionKind::Bilinear: return "BILIN";
    case ExtensionKind::Pseudolinear: return "PSEUDO";
    case ExtensionKind::Quasiquadratic: return "QQUAD";
    case ExtensionKind::Quasiquartic: return "QQUART";
  }
  return "?";
}

BisplitResult bisplit(const Graph& g, const BisplitSpec& spec) {
  check_partition(g, spec);
  check_degree(g, spec.vertex);
  Graph h = g;
  SplitIds ids = split_in_place(h, spec.vertex, spec.side2);
  return {std::move(h), ids.inner, ids.outer1, ids.outer2};
}

void validate_spec(const Graph& g, const ExtensionSpec& spec) {
  std::visit(
      Overloaded{
          [&](const StrictLinear1& s) {
            check_degree(g, s.split.vertex);
            check_partition(g, s.split);
            require_vertex(g, s.u0, "u0");
            if (s.u0 == s.split.vertex) violated("u0≠v");
            if (g.has_edge(s.u0, s.split.vertex)) violated("u0 non-adjacent to v");
          },
          [&](const StrictLinear2& s) {
            check_degree(g, s.split_v.vertex);
            check_degree(g, s.split_u.vertex);
            check_partition(g, s.split_v);
            check_partition(g, s.split_u);
            if (s.split_u.vertex == s.split_v.vertex) violated("u≠v");
            if (g.has_edge(s.split_u.vertex, s.split_v.vertex)) violated("u non-adjacent to v");
          },
          [&](const StrictLinear3& s) {
            check_degree(g, s.split.vertex);
            check_partition(g, s.split);
            std::vector<VertexId> joined = s.v1_side;
            joined.insert(joined.end(), s.v2_side.begin(), s.v2_side.end());
            if (sorted(joined) != sorted(s.split.side1)) {
              throw Error(ErrorKind::BadPartition, "second bisplit sides must partition side1 of the first");
            }
            if (s.v1_side.empty() || s.v2_side.size() < 2) {
              throw Error(ErrorKind::BadPartition, "second bisplit needs |v1 side| >= 1 (plus u0) and |v2 side| >= 2");
            }
          },
          [&](const Bilinear& s) {
            const VertexId u = s.split.vertex;
            check_degree(g, u);
            check_partition(g, s.split);
            require_vertex(g, s.v, "v");
            require_vertex(g, s.w, "w");
            if (s.v == u) violated("u≠v");
            if (s.v == s.w) violated("v≠w");
            if (!g.has_edge(u, s.w)) violated("w adjacent to u");
            if (g.has_edge(s.v, s.w)) violated("w not adjacent to v");
            if (std::find(s.split.side2.begin(), s.split.side2.end(), s.w) == s.split.side2.end()) {
              violated("w on the side of u2");
            }
          },
          [&](const Pseudolinear& s) {
            const VertexId u = s.split.vertex;
            check_degree(g, u);
            check_partition(g, s.split);
            require_vertex(g, s.v, "v");
            if (s.v == u) violated("u≠v");
            if (g.has_edge(u, s.v)) violated("v non-adjacent to u");
          },
          [&](const Quasiquadratic& s) {
            require_vertex(g, s.u, "u");
            require_vertex(g, s.v, "v");
            require_vertex(g, s.x, "x");
            require_vertex(g, s.y, "y");
            if (s.u == s.v) violated("u≠v");
            if (s.x == s.u) violated("u≠x");
            if (s.y == s.v) violated("v≠y");
            if (std::minmax(s.u, s.v) == std::minmax(s.x, s.y)) violated("{u,v}≠{x,y}");
          },
          [&](const Quasiquartic& s) {
            require_vertex(g, s.u, "u");
            require_vertex(g, s.v, "v");
            require_vertex(g, s.x, "x");
            require_vertex(g, s.y, "y");
            if (s.u == s.v) violated("u≠v");
            if (s.x == s.y) violated("x≠y");
            if (s.u == s.y) violated("u≠y");
            if (s.v == s.x) violated("v≠x");
            if (std::minmax(s.u, s.v) == std::minmax(s.x, s.y)) violated("{u,v}≠{x,y}");
          },
      },
      spec.op);
}

std::pair<Graph, ExtensionRecord> apply(const Graph& g, const ExtensionSpec& spec) {
  validate_spec(g, spec);
  Graph h = g;
  ExtensionRecord rec;
  rec.spec = spec;
  rec.kind = kind_of(spec);
  PickCursor picks(spec.picks);
  std::vector<VertexId> fundament;

  std::visit(
      Overloaded{
          [&](const StrictLinear1& s) {
            SplitIds v = split_in_place(h, s.split.vertex, s.split.side2);
            h.add_edge(s.u0, v.inner);
            rec.new_vertices = {v.outer1, v.outer2, v.inner};
            fundament = {s.u0, s.split.vertex};
            picks.take(2, s.split.side1, fundament, "neighbours of v1");
            picks.take(2, s.split.side2, fundament, "neighbours of v2");
          },
          [&](const StrictLinear2& s) {
            SplitIds v = split_in_place(h, s.split_v.vertex, s.split_v.side2);
            SplitIds u = split_in_place(h, s.split_u.vertex, s.split_u.side2);
            h.add_edge(u.inner, v.inner);
            rec.new_vertices = {v.outer1, v.outer2, v.inner, u.outer1, u.outer2, u.inner};
            fundament = {s.split_u.vertex, s.split_v.vertex};
            picks.take(2, s.split_v.side1, fundament, "neighbours of v1");
            picks.take(2, s.split_v.side2, fundament, "neighbours of v2");
            picks.take(2, s.split_u.side1, fundament, "neighbours of u1");
            picks.take(2, s.split_u.side2, fundament, "neighbours of u2");
          },
          [&](const StrictLinear3& s) {
            SplitIds u = split_in_place(h, s.split.vertex, s.split.side2);
            // u1 keeps the id of v; its neighbourhood is side1 plus u0, and
            // v1 (which keeps that id again) retains u0.
            SplitIds v = split_in_place(h, u.outer1, s.v2_side);
            h.add_edge(u.inner, v.inner);
            rec.new_vertices = {v.outer1, u.outer2, u.inner, v.outer2, v.inner};
            fundament = {s.split.vertex};
            picks.take(1, s.v1_side, fundament, "neighbour of v1");
            picks.take(2, s.split.side2, fundament, "neighbours of u2");
            picks.take(2, s.v2_side, fundament, "neighbours of v2");
          },
          [&](const Bilinear& s) {
            SplitIds u = split_in_place(h, s.split.vertex, s.split.side2);
            h.remove_edge(u.outer2, s.w);
            VertexId a = h.add_vertex();
            VertexId b = h.add_vertex();
            h.add_edge(u.outer2, a);
            h.add_edge(a, b);
            h.add_edge(b, s.w);
            h.add_edge(b, u.inner);
            h.add_edge(a, s.v);
            rec.new_vertices = {u.outer1, u.outer2, u.inner, a, b};
            fundament = {s.split.vertex, s.v, s.w};
            picks.take(1, without(s.split.side2, s.w), fundament, "neighbour of u2");
            picks.take(2, s.split.side1, fundament, "neighbours of u1");
          },
          [&](const Pseudolinear& s) {
            const VertexId u1 = s.split.vertex;
            for (VertexId w : s.split.side2) h.remove_edge(u1, w);
            VertexId u2 = h.add_vertex();
            for (VertexId w : s.split.side2) h.add_edge(u2, w);
            VertexId a = h.add_vertex();
            VertexId b = h.add_vertex();
            VertexId c = h.add_vertex();
            h.add_edge(u1, a);
            h.add_edge(a, b);
            h.add_edge(b, c);
            h.add_edge(c, u2);
            h.add_edge(a, c);
            h.add_edge(b, s.v);
            rec.new_vertices = {u1, u2, a, b, c};
            fundament = {u1, s.v};
            picks.take(2, s.split.side1, fundament, "neighbours of u1");
            picks.take(2, s.split.side2, fundament, "neighbours of u2");
          },
          [&](const Quasiquadratic& s) {
            rec.conservative = !h.has_edge(s.u, s.v);
            if (!rec.conservative) h.remove_edge(s.u, s.v);
            VertexId up = h.add_vertex();
            VertexId vp = h.add_vertex();
            h.add_edge(up, vp);
            h.add_edge(up, s.u);
            h.add_edge(up, s.x);
            h.add_edge(vp, s.v);
            h.add_edge(vp, s.y);
            rec.new_vertices = {up, vp};
            rec.upper_fundament = std::make_pair(s.u, s.v);
            fundament = {s.u, s.v, s.x, s.y};
            if (s.x == s.y) rec.identifications.emplace_back("x=y");
            if (s.x == s.v) rec.identifications.emplace_back("x=v");
            if (s.y == s.u) rec.identifications.emplace_back("y=u");
          },
          [&](const Quasiquartic& s) {
            int deleted = 0;
            if (h.has_edge(s.u, s.v)) {
              h.remove_edge(s.u, s.v);
              ++deleted;
            }
            if (h.has_edge(s.x, s.y)) {
              h.remove_edge(s.x, s.y);
              ++deleted;
            }
            rec.conservative = deleted == 0;
            VertexId up = h.add_vertex();
            VertexId vp = h.add_vertex();
            VertexId xp = h.add_vertex();
            VertexId yp = h.add_vertex();
            h.add_edge(up, vp);
            h.add_edge(vp, yp);
            h.add_edge(yp, xp);
            h.add_edge(xp, up);
            h.add_edge(s.u, up);
            h.add_edge(s.v, vp);
            h.add_edge(s.x, xp);
            h.add_edge(s.y, yp);
            rec.new_vertices = {up, vp, xp, yp};
            fundament = {s.u, s.v, s.x, s.y};
            if (s.u == s.x) rec.identifications.emplace_back("u=x");
            if (s.v == s.y) rec.identifications.emplace_back("v=y");
          },
      },
      spec.op);
  picks.finish();

  std::sort(fundament.begin(), fundament.end());
  fundament.erase(std::unique(fundament.begin(), fundament.end()), fundament.end());
  rec.fundament = std::move(fundament);
  rec.delta_n = static_cast<std::int64_t>(h.num_vertices()) - static_cast<std::int64_t>(g.num_vertices());
  rec.delta_m = static_cast<std::int64_t>(h.num_edges()) - static_cast<std::int64_t>(g.num_edges());

  if (!deltas_match_table(rec)) {
    throw Error(ErrorKind::InternalCheckFailed, "delta table mismatch for " + serialize_spec(spec));
  }
  if (!fundament_size_ok(rec)) throw Error(ErrorKind::InternalCheckFailed, "fundament larger than 3*delta_n");
  if (!degrees_preserved_outside_fundament(g, h, rec)) {
    throw Error(ErrorKind::InternalCheckFailed, "degree changed outside the fundament");
  }
  return {std::move(h), std::move(rec)};
}

bool degrees_preserved_outside_fundament(const Graph& before, const Graph& after, const ExtensionRecord& rec) {
  for (VertexId v = 0; static_cast<std::size_t>(v) < before.num_vertices(); ++v) {
    if (std::binary_search(rec.fundament.begin(), rec.fundament.end(), v)) continue;
    if (!after.has_vertex(v) || before.degree(v) != after.degree(v)) return false;
  }
  return true;
}

bool fundament_size_ok(const ExtensionRecord& rec) {
  return static_cast<std::int64_t>(rec.fundament.size()) <= 3 * rec.delta_n;
}

bool deltas_match_table(const ExtensionRecord& rec) {
  auto is = [&](std::int64_t dn, std::int64_t dm) { return rec.delta_n == dn && rec.delta_m == dm; };
  switch (rec.kind) {
    case ExtensionKind::StrictLinear1: return is(2, 3);
    case ExtensionKind::StrictLinear2:
    case ExtensionKind::StrictLinear3: return is(4, 5);
    case ExtensionKind::Bilinear:
    case ExtensionKind::Pseudolinear: return is(4, 6);
    case ExtensionKind::Quasiquadratic: return rec.conservative ? is(2, 5) : is(2, 4);
    case ExtensionKind::Quasiquartic: return rec.delta_n == 4 && rec.delta_m >= 6 && rec.delta_m <= 8 &&
                                             (rec.conservative == (rec.delta_m == 8));
  }
  return false;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Ordered 2-partitions (A, B) of `items` with |A|, |B| >= min sizes.
// With `unordered`, only partitions where A contains items[0] are listed.
void for_each_partition(const std::vector<VertexId>& items, std::size_t min_a, std::size_t min_b, bool unordered,
                        const std::function<void(const std::vector<VertexId>&, const std::vector<VertexId>&)>& visit) {
  const std::size_t k = items.size();
  if (k > 24) throw Error(ErrorKind::TooLarge, "neighbourhood too large to enumerate partitions");
  std::vector<VertexId> a, b;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (unordered && !(mask & 1u)) continue;
    a.clear();
    b.clear();
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1u ? a : b).push_back(items[i]);
    if (a.size() >= min_a && b.size() >= min_b) visit(a, b);
  }
}

std::vector<VertexId> nbr_vec(const Graph& g, VertexId v) {
  auto s = g.neighbors(v);
  return {s.begin(), s.end()};
}

}  // namespace

void for_each_spec(const Graph& g, VariantMask variants, const EnumerateOptions& options,
                   const std::function<void(const ExtensionSpec&)>& visit) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  auto wants = [&](ExtensionKind k) { return (variants & variant_bit(k)) != 0; };
  auto emit = [&](ExtensionOp op) { visit(ExtensionSpec{std::move(op), {}}); };

  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) < 4) continue;
    const auto nv = nbr_vec(g, v);

    if (wants(ExtensionKind::StrictLinear1)) {
      for_each_partition(nv, 2, 2, true, [&](const auto& s1, const auto& s2) {
        for (VertexId u0 = 0; u0 < n; ++u0) {
          if (u0 == v || g.has_edge(u0, v)) continue;
          emit(StrictLinear1{{v, s1, s2}, u0});
        }
      });
    }
    if (wants(ExtensionKind::StrictLinear2)) {
      for (VertexId u = v + 1; u < n; ++u) {
        if (g.degree(u) < 4 || g.has_edge(u, v)) continue;
        const auto nu = nbr_vec(g, u);
        for_each_partition(nv, 2, 2, true, [&](const auto& a1, const auto& a2) {
          for_each_partition(nu, 2, 2, true,
                             [&](const auto& b1, const auto& b2) { emit(StrictLinear2{{v, a1, a2}, {u, b1, b2}}); });
        });
      }
    }
    if (wants(ExtensionKind::StrictLinear3)) {
      for_each_partition(nv, 3, 2, false, [&](const auto& s1, const auto& s2) {
        for_each_partition(s1, 1, 2, false,
                           [&](const auto& m1, const auto& m2) { emit(StrictLinear3{{v, s1, s2}, m1, m2}); });
      });
    }
    if (wants(ExtensionKind::Bilinear)) {
      for (VertexId w : nv) {
        std::vector<VertexId> rest = without(nv, w);
        for_each_partition(rest, 2, 1, false, [&](const auto& s1, const auto& s2_rest) {
          std::vector<VertexId> s2 = s2_rest;
          s2.insert(std::lower_bound(s2.begin(), s2.end(), w), w);
          for (VertexId x = 0; x < n; ++x) {
            if (x == v || x == w || g.has_edge(x, w)) continue;
            emit(Bilinear{{v, s1, s2}, x, w});
          }
        });
      }
    }
    if (wants(ExtensionKind::Pseudolinear)) {
      for_each_partition(nv, 2, 2, true, [&](const auto& s1, const auto& s2) {
        for (VertexId x = 0; x < n; ++x) {
          if (x == v || g.has_edge(x, v)) continue;
          emit(Pseudolinear{{v, s1, s2}, x});
        }
      });
    }
  }

  if (wants(ExtensionKind::Quasiquadratic)) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (u == v) continue;
        for (VertexId x = 0; x < n; ++x) {
          if (x == u) continue;
          for (VertexId y = 0; y < n; ++y) {
            if (y == v || std::minmax(u, v) == std::minmax(x, y)) continue;
            if (options.reduce_tuple_symmetry && std::tie(v, u, y, x) < std::tie(u, v, x, y)) continue;
            emit(Quasiquadratic{u, v, x, y});
          }
        }
      }
    }
  }
  if (wants(ExtensionKind::Quasiquartic)) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (u == v) continue;
        for (VertexId x = 0; x < n; ++x) {
          if (x == v) continue;
          for (VertexId y = 0; y < n; ++y) {
            if (y == x || y == u || std::minmax(u, v) == std::minmax(x, y)) continue;
            if (options.reduce_tuple_symmetry) {
              auto key = std::tie(u, v, x, y);
              if (std::tie(x, y, u, v) < key || std::tie(v, u, y, x) < key || std::tie(y, x, v, u) < key) continue;
            }
            emit(Quasiquartic{u, v, x, y});
          }
        }
      }
    }
  }
}

std::vector<ExtensionSpec> enumerate_specs(const Graph& g, VariantMask variants, const EnumerateOptions& options) {
  std::vector<ExtensionSpec> out;
  for_each_spec(g, variants, options, [&](const ExtensionSpec& s) { out.push_back(s); });
  return out;
}

VariantMask parse_variants(std::string_view text) {
  if (text == "all") return kAllVariants;
  VariantMask mask = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tag = text.substr(pos, comma - pos);
    bool found = false;
    for (int k = 0; k < 7; ++k) {
      if (tag_of(static_cast<ExtensionKind>(k)) == tag) {
        mask |= variant_bit(static_cast<ExtensionKind>(k));
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::BadParameter, "unknown extension tag '" + std::string(tag) + "'");
    pos = comma + 1;
  }
  return mask;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string join(std::vector<VertexId> xs) {
  std::sort(xs.begin(), xs.end());
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

class FieldReader {
 public:
  FieldReader(std::string_view line, std::map<std::string, std::string, std::less<>> fields)
      : line_(line), fields_(std::move(fields)) {}

  VertexId id(std::string_view key) {
    auto text = take(key);
    return to_id(text);
  }

  std::vector<VertexId> list(std::string_view key) {
    auto text = take(key);
    std::vector<VertexId> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      out.push_back(to_id(text.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return out;
  }

  std::vector<VertexId> optional_list(std::string_view key) {
    if (fields_.find(key) == fields_.end()) return {};
    return list(key);
  }

  void finish() const {
    if (!fields_.empty()) fail("unexpected field '" + fields_.begin()->first + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(1, 1, msg + " in '" + std::string(line_) + "'");
  }

 private:
  std::string take(std::string_view key) {
    auto it = fields_.find(key);
    if (it == fields_.end()) fail("missing field '" + std::string(key) + "'");
    std::string value = it->second;
    fields_.erase(it);
    return value;
  }

  VertexId to_id(std::string_view text) const {
    VertexId value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
      fail("bad vertex id '" + std::string(text) + "'");
    }
    return value;
  }

  std::string_view line_;
  std::map<std::string, std::string, std::less<>> fields_;
};

}  // namespace

std::string serialize_spec(const ExtensionSpec& spec) {
  std::string out(tag_of(kind_of(spec)));
  auto field = [&](const char* key, const std::string& value) {
    out += ' ';
    out += key;
    out += '=';
    out += value;
  };
  auto id = [](VertexId v) { return std::to_string(v); };
  std::visit(Overloaded{
                 [&](const StrictLinear1& s) {
                   field("v", id(s.split.vertex));
                   field("N1", join(s.split.side1));
                   field("N2", join(s.split.side2));
                   field("u0", id(s.u0));
                 },
                 [&](const StrictLinear2& s) {
                   field("v", id(s.split_v.vertex));
                   field("N1", join(s.split_v.side1));
                   field("N2", join(s.split_v.side2));
                   field("u", id(s.split_u.vertex));
                   field("M1", join(s.split_u.side1));
                   field("M2", join(s.split_u.side2));
                 },
                 [&](const StrictLinear3& s) {
                   field("v", id(s.split.vertex));
                   field("N1", join(s.split.side1));
                   field("N2", join(s.split.side2));
                   field("M1", join(s.v1_side));
                   field("M2", join(s.v2_side));
                 },
                 [&](const Bilinear& s) {
                   field("u", id(s.split.vertex));
                   field("v", id(s.v));
                   field("w", id(s.w));
                   field("N1", join(s.split.side1));
                   field("N2", join(s.split.side2));
                 },
                 [&](const Pseudolinear& s) {
                   field("u", id(s.split.vertex));
                   field("v", id(s.v));
                   field("N1", join(s.split.side1));
                   field("N2", join(s.split.side2));
                 },
                 [&](const Quasiquadratic& s) {
                   field("u", id(s.u));
                   field("v", id(s.v));
                   field("x", id(s.x));
                   field("y", id(s.y));
                 },
                 [&](const Quasiquartic& s) {
                   field("u", id(s.u));
                   field("v", id(s.v));
                   field("x", id(s.x));
                   field("y", id(s.y));
                 },
             },
             spec.op);
  if (!spec.picks.empty()) {
    out += " F=";
    for (std::size_t i = 0; i < spec.picks.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(spec.picks[i]);
    }
  }
  return out;
}

ExtensionSpec parse_spec(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size()) break;
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  if (tokens.empty()) throw ParseError(1, 1, "empty extension spec");

  std::map<std::string, std::string, std::less<>> fields;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    auto eq = tokens[i].find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == tokens[i].size()) {
      throw ParseError(1, 1, "expected key=value, got '" + std::string(tokens[i]) + "'");
    }
    if (!fields.emplace(std::string(tokens[i].substr(0, eq)), std::string(tokens[i].substr(eq + 1))).second) {
      throw ParseError(1, 1, "duplicate field '" + std::string(tokens[i].substr(0, eq)) + "'");
    }
  }
  FieldReader r(line, std::move(fields));
  const std::string_view tag = tokens[0];
  ExtensionSpec spec;
  if (tag == "SL1") {
    StrictLinear1 s;
    s.split.vertex = r.id("v");
    s.split.side1 = r.list("N1");
    s.split.side2 = r.list("N2");
    s.u0 = r.id("u0");
    spec.op = s;
  } else if (tag == "SL2") {
    StrictLinear2 s;
    s.split_v.vertex = r.id("v");
    s.split_v.side1 = r.list("N1");
    s.split_v.side2 = r.list("N2");
    s.split_u.vertex = r.id("u");
    s.split_u.side1 = r.list("M1");
    s.split_u.side2 = r.list("M2");
    spec.op = s;
  } else if (tag == "SL3") {
    StrictLinear3 s;
    s.split.vertex = r.id("v");
    s.split.side1 = r.list("N1");
    s.split.side2 = r.list("N2");
    s.v1_side = r.list("M1");
    s.v2_side = r.list("M2");
    spec.op = s;
  } else if (tag == "BILIN") {
    Bilinear s;
    s.split.vertex = r.id("u");
    s.v = r.id("v");
    s.w = r.id("w");
    s.split.side1 = r.list("N1");
    s.split.side2 = r.list("N2");
    spec.op = s;
  } else if (tag == "PSEUDO") {
    Pseudolinear s;
    s.split.vertex = r.id("u");
    s.v = r.id("v");
    s.split.side1 = r.list("N1");
    s.split.side2 = r.list("N2");
    spec.op = s;
  } else if (tag == "QQUAD") {
    spec.op = Quasiquadratic{r.id("u"), r.id("v"), r.id("x"), r.id("y")};
  } else if (tag == "QQUART") {
    spec.op = Quasiquartic{r.id("u"), r.id("v"), r.id("x"), r.id("y")};
  } else {
    throw ParseError(1, 1, "unknown extension tag '" + std::string(tag) + "'");
  }
  spec.picks = r.optional_list("F");
  r.finish();
  // Canonical list order so that parse(serialize(s)) == s.
  std::visit(Overloaded{
                 [](StrictLinear1& s) { s.split.side1 = sorted(s.split.side1), s.split.side2 = sorted(s.split.side2); },
                 [](StrictLinear2& s) {
                   s.split_v.side1 = sorted(s.split_v.side1), s.split_v.side2 = sorted(s.split_v.side2);
                   s.split_u.side1 = sorted(s.split_u.side1), s.split_u.side2 = sorted(s.split_u.side2);
                 },
                 [](StrictLinear3& s) {
                   s.split.side1 = sorted(s.split.side1), s.split.side2 = sorted(s.split.side2);
                   s.v1_side = sorted(s.v1_side), s.v2_side = sorted(s.v2_side);
                 },
                 [](Bilinear& s) { s.split.side1 = sorted(s.split.side1), s.split.side2 = sorted(s.split.side2); },
                 [](Pseudolinear& s) { s.split.side1 = sorted(s.split.side1), s.split.side2 = sorted(s.split.side2); },
                 [](Quasiquadratic&) {},
                 [](Quasiquartic&) {},
             },
             spec.op);
  return spec;
}

}  // namespace brickforge
