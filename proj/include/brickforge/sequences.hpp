#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "brickforge/extensions.hpp"
#include "brickforge/graph.hpp"

namespace brickforge {

using Rational = boost::rational<std::int64_t>;

enum class StartGraph { K4, Prism };

std::string_view to_string(StartGraph start);
Graph start_graph(StartGraph start);

/// G0 -> G1 -> ... -> Gk where every Gi is a brick and each step is a strict extension.
struct BrickSequence {
  StartGraph start = StartGraph::K4;
  std::vector<ExtensionRecord> steps;
  /// G0..Gk; graphs.size() == steps.size() + 1.
  std::vector<Graph> graphs;

  const Graph& last() const { return graphs.back(); }
};

/// Vertices and edges contributed by the start graph (index 0), linear-type
/// extensions (1), quasiquadratic (2) and quasiquartic (3) extensions, with
/// conservative quasiquadratics also tallied in nu2c/eps2c.
struct SequenceStats {
  std::int64_t nu[4] = {0, 0, 0, 0};
  std::int64_t eps[4] = {0, 0, 0, 0};
  std::int64_t nu2c = 0;
  std::int64_t eps2c = 0;

  std::int64_t total_vertices() const { return nu[0] + nu[1] + nu[2] + nu[3]; }
  std::int64_t total_edges() const { return eps[0] + eps[1] + eps[2] + eps[3]; }
  /// eps0 = 3/2 nu0, eps1 <= 3/2 nu1, eps2 - eps2c = 2 (nu2 - nu2c), eps2c = 5/2 nu2c, eps3 <= 2 nu3.
  bool density_relations_hold() const;
};

/// Applies the specs in turn, brick-checking every graph. Failures are
/// reported as StepError with the 1-based step (NotABrick, or the kind raised
/// by validation).
BrickSequence build(StartGraph start, const std::vector<ExtensionSpec>& specs);

/// Throws InternalCheckFailed if the vertex/edge totals disagree with the
/// last graph or a density relation fails.
SequenceStats stats(const BrickSequence& seq);

/// Stable "key=value" lines, one per counter, then identity and relation checks.
std::string format_stats(const SequenceStats& s, const Graph& last);

struct LotsOfQuadReport {
  Rational delta;
  std::int64_t nu2c = 0;
  std::int64_t n = 0;
  bool holds = false;  // nu2c >= delta * n
};

/// Requires the last graph to be a minimal brick with average degree >= 4 + delta,
/// delta > 0; throws PreconditionUnmet otherwise.
LotsOfQuadReport check_lotsofquad(const BrickSequence& seq, Rational delta);

struct HighDegreeReport {
  Rational delta;        // average degree minus 4
  Rational bound;        // (4 delta - 3) n
  std::int64_t n_deg3 = 0;
  bool applicable = false;  // delta > 0 and 4 delta - 3 > 0
  bool holds = true;
};

/// Degree-3 count against (4 delta - 3) n for a minimal brick with average degree 4 + delta.
HighDegreeReport high_average_degree_report(const Graph& g);

struct ReorderResult {
  /// C - {p, q}, with ids of C compacted.
  Graph b_prime;
  /// A -> B': recC's extension transported to A.
  ExtensionRecord a_to_b_prime;
  /// B' -> C', where C' is C relabelled so that p, q become the two newest vertices.
  ExtensionRecord b_prime_to_c;
  /// C as built from A; relabel(c, c_relabel) gives C'.
  Graph c;
  /// Id in C -> id in C'.
  std::vector<VertexId> c_relabel;
};

/// Moves a conservative quasiquadratic step A -> B (new vertices p, q) past
/// the following step B -> C. Throws PreconditionUnmet if recB is not
/// conservative quasiquadratic, FundamentConflict if p or q lies in the
/// fundament of recC, InternalCheckFailed if any postcondition fails.
ReorderResult reorder(const Graph& a, const ExtensionRecord& rec_b, const ExtensionRecord& rec_c);

struct QuadOnQuadResult {
  Graph g_prime;
  Graph g_double_prime;
  ExtensionRecord first;
  ExtensionRecord second;
  /// New vertex of the first step that lies in the second fundament (u'),
  /// and the other one (v').
  VertexId u_prime = 0;
  VertexId v_prime = 0;
  /// Old neighbours of u' from the first step: u (upper fundament) and x.
  VertexId u = 0, x = 0;
  /// The second step's fundament written {u', r, s, t}.
  VertexId r = 0, s = 0, t = 0;
  bool v_prime_outside_st = false;   // v' not in {s, t}
  /// v', x not in {s, t}, and not (u' in {s, t} with r in {x, v'}).
  bool separation_excluded = false;
  bool minus_uu_bicritical = false;  // G'' - uu' bicritical
  bool minus_uu_three_connected = false;
  bool minimal = false;
  Edge witness;
};

/// Two conservative quasiquadratic steps where the second uses a new vertex of
/// the first. Asserts G'' is a brick and not minimal. When v' lies outside
/// {s, t}, asserts that G'' - uu' is bicritical, and when additionally
/// `separation_excluded` holds, that it is 3-connected. The witness is uu'
/// whenever G'' - uu' is a brick, otherwise u'v' or xu' (asserted to leave a
/// brick).
QuadOnQuadResult build_quadonquad(const Graph& g, const Quasiquadratic& first, const Quasiquadratic& second);

struct SequenceRecipe {
  StartGraph start = StartGraph::Prism;
  std::vector<ExtensionSpec> specs;
};

/// "start K4|PRISM" then one serialized spec per line; blank lines and lines
/// starting with '#' are ignored.
SequenceRecipe read_sequence(std::istream& in);
void write_sequence(std::ostream& out, const SequenceRecipe& recipe);

/// Triple ladder on 6 + 6r vertices: r alternating quasiquartic/quasiquadratic
/// pairs from the prism. Two thirds of its vertices have degree 3.
SequenceRecipe triple_ladder_recipe(int r);
/// The triple ladder followed by two conservative quasiquadratic steps sharing
/// the fundament {1, 13, 14, 20}, which raise those vertices to degree 6.
/// Requires r >= 3.
SequenceRecipe ladder_plus_recipe(int r);

}  // namespace brickforge
