#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "brickforge/graph.hpp"

namespace brickforge {

/// Replace `vertex` by outer vertices v1 (adjacent to side1) and v2 (adjacent
/// to side2), both joined to a new inner vertex v0.
struct BisplitSpec {
  VertexId vertex = 0;
  std::vector<VertexId> side1;
  std::vector<VertexId> side2;

  friend bool operator==(const BisplitSpec&, const BisplitSpec&) = default;
};

// Vertex naming below follows the construction each variant performs. In every
// variant the pre-graph vertices keep their ids, the first outer vertex of a
// bisplit inherits the id of the split vertex, and every other new vertex is
// appended in the order listed.

/// Bisplit v (v1, v2, v0), then join a non-neighbour u0 of v to v0.
/// New ids: v2, v0.
struct StrictLinear1 {
  BisplitSpec split;
  VertexId u0 = 0;
  friend bool operator==(const StrictLinear1&, const StrictLinear1&) = default;
};

/// Bisplit two non-adjacent vertices v and u, then join the two inner vertices.
/// New ids: v2, v0, u2, u0.
struct StrictLinear2 {
  BisplitSpec split_v;
  BisplitSpec split_u;
  friend bool operator==(const StrictLinear2&, const StrictLinear2&) = default;
};

/// Bisplit v into u1 (side1), u2 (side2) with inner u0; bisplit u1 into v1
/// (adjacent to u0 and `v1_side`) and v2 (adjacent to `v2_side`) with inner
/// v0; join u0 and v0. `v1_side` and `v2_side` partition split.side1.
/// New ids: u2, u0, v2, v0.
struct StrictLinear3 {
  BisplitSpec split;
  std::vector<VertexId> v1_side;
  std::vector<VertexId> v2_side;
  friend bool operator==(const StrictLinear3&, const StrictLinear3&) = default;
};

/// Bisplit u (u2 is the outer vertex on w's side), subdivide u2-w into
/// u2-a-b-w, add b-u0 and a-v. Requires w adjacent to u but not to v.
/// New ids: u2, u0, a, b.
struct Bilinear {
  BisplitSpec split;  // split.vertex == u, w in split.side2
  VertexId v = 0;
  VertexId w = 0;
  friend bool operator==(const Bilinear&, const Bilinear&) = default;
};

/// Replace u by u1 (side1) and u2 (side2), add the path u1-a-b-c-u2 and the
/// edges a-c and b-v, where v is a non-neighbour of u.
/// New ids: u2, a, b, c.
struct Pseudolinear {
  BisplitSpec split;  // split.vertex == u
  VertexId v = 0;
  friend bool operator==(const Pseudolinear&, const Pseudolinear&) = default;
};

/// Delete uv if present; add adjacent u', v' with u' ~ u, x and v' ~ v, y.
/// New ids: u', v'.
struct Quasiquadratic {
  VertexId u = 0, v = 0, x = 0, y = 0;
  friend bool operator==(const Quasiquadratic&, const Quasiquadratic&) = default;
};

/// Delete uv and xy if present; add the 4-cycle u'v'y'x' and the edges uu',
/// vv', xx', yy'. New ids: u', v', x', y'.
struct Quasiquartic {
  VertexId u = 0, v = 0, x = 0, y = 0;
  friend bool operator==(const Quasiquartic&, const Quasiquartic&) = default;
};

using ExtensionOp =
    std::variant<StrictLinear1, StrictLinear2, StrictLinear3, Bilinear, Pseudolinear, Quasiquadratic, Quasiquartic>;

enum class ExtensionKind : std::uint8_t {
  StrictLinear1,
  StrictLinear2,
  StrictLinear3,
  Bilinear,
  Pseudolinear,
  Quasiquadratic,
  Quasiquartic,
};

/// Density-accounting class: strict linear/bilinear/pseudolinear, quasiquadratic, quasiquartic.
enum class ExtensionClass : std::uint8_t { Linear = 1, Quadratic = 2, Quartic = 3 };

/// One strict extension. `picks` optionally fixes the neighbour choices that
/// enter the fundament, flattened in this order:
///   SL1: 2 of v1, 2 of v2        SL2: 2 each of v1, v2, u1, u2
///   SL3: 1 of v1, 2 of u2, 2 of v2
///   Bilinear: 1 of u2, 2 of u1   Pseudolinear: 2 of u1, 2 of u2
/// Empty picks select the lexicographically smallest valid choice.
struct ExtensionSpec {
  ExtensionOp op;
  std::vector<VertexId> picks;

  friend bool operator==(const ExtensionSpec&, const ExtensionSpec&) = default;
};

ExtensionKind kind_of(const ExtensionSpec& spec);
ExtensionClass class_of(ExtensionKind kind);
std::string_view tag_of(ExtensionKind kind);

struct ExtensionRecord {
  ExtensionSpec spec;
  ExtensionKind kind = ExtensionKind::Quasiquadratic;
  /// Sorted, in pre-graph ids.
  std::vector<VertexId> fundament;
  /// Post-graph ids in creation order (including ids inherited by outer vertices).
  std::vector<VertexId> new_vertices;
  std::int64_t delta_n = 0;
  std::int64_t delta_m = 0;
  /// Quasiquadratic: u and v were non-adjacent. Quasiquartic: nothing was deleted.
  bool conservative = false;
  /// {u, v} for quasiquadratic.
  std::optional<std::pair<VertexId, VertexId>> upper_fundament;
  /// Vertex identifications used, e.g. "x=y" (reported, all allowed by the definitions).
  std::vector<std::string> identifications;
};

struct BisplitResult {
  Graph graph;
  VertexId inner = 0;
  VertexId outer1 = 0;  // inherits the split vertex's id
  VertexId outer2 = 0;
};

/// Errors: BadPartition if the sides do not partition N(v) into parts of size >= 2;
/// DegreeTooLow if deg(v) < 4 (only reachable with a well-formed partition).
BisplitResult bisplit(const Graph& g, const BisplitSpec& spec);

/// Throws SpecInvariantViolated (naming the violated clause), DegreeTooLow,
/// BadPartition or MissingVertex for invalid specs.
void validate_spec(const Graph& g, const ExtensionSpec& spec);

/// Applies the extension and checks the record against the delta table and
/// the fundament properties before returning.
std::pair<Graph, ExtensionRecord> apply(const Graph& g, const ExtensionSpec& spec);

/// Degree preservation outside the fundament.
bool degrees_preserved_outside_fundament(const Graph& before, const Graph& after, const ExtensionRecord& rec);
/// |F| <= 3 * delta_n.
bool fundament_size_ok(const ExtensionRecord& rec);
/// (delta_n, delta_m) as fixed by the variant.
bool deltas_match_table(const ExtensionRecord& rec);

using VariantMask = std::uint8_t;
constexpr VariantMask variant_bit(ExtensionKind k) { return static_cast<VariantMask>(1u << static_cast<unsigned>(k)); }
inline constexpr VariantMask kAllVariants = 0x7f;
/// Parses "all" or a comma-separated tag list such as "QQUAD,QQUART".
VariantMask parse_variants(std::string_view text);

struct EnumerateOptions {
  /// Skip quasiquadratic/quasiquartic tuples that are images of an earlier
  /// tuple under the symmetries of the construction (u<->v with x<->y, and
  /// for quartic the swap of the two deleted pairs). Off by default.
  bool reduce_tuple_symmetry = false;
};

/// Every valid spec of the requested variants in a deterministic order.
/// Partitions whose two sides play symmetric roles are listed once.
void for_each_spec(const Graph& g, VariantMask variants, const EnumerateOptions& options,
                   const std::function<void(const ExtensionSpec&)>& visit);
std::vector<ExtensionSpec> enumerate_specs(const Graph& g, VariantMask variants,
                                           const EnumerateOptions& options = {});

/// Line-oriented text form, e.g. "QQUAD u=0 v=3 x=1 y=4" or
/// "SL1 v=0 N1=1,2 N2=3,4 u0=5". Lists are sorted ascending; an optional
/// trailing "F=a,b,..." carries explicit picks.
std::string serialize_spec(const ExtensionSpec& spec);
ExtensionSpec parse_spec(std::string_view line);

}  // namespace brickforge
