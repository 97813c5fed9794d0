#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "brickforge/graph.hpp"

namespace brickforge {

struct NoWitness {
  friend bool operator==(const NoWitness&, const NoWitness&) = default;
};
/// G - u - v has no perfect matching.
struct BadPair {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const BadPair&, const BadPair&) = default;
};
/// G - w - z is disconnected.
struct CutPair {
  VertexId w = 0;
  VertexId z = 0;
  friend bool operator==(const CutPair&, const CutPair&) = default;
};
/// G - e is still a brick.
struct DeletableEdge {
  Edge edge;
  friend bool operator==(const DeletableEdge&, const DeletableEdge&) = default;
};
/// Fewer vertices than the property needs.
struct TooSmall {
  friend bool operator==(const TooSmall&, const TooSmall&) = default;
};

using Witness = std::variant<NoWitness, BadPair, CutPair, DeletableEdge, TooSmall>;

struct CertificateReport {
  bool verdict = false;
  Witness witness;

  explicit operator bool() const noexcept { return verdict; }
};

/// "BadPair(2,5)", "CutPair(0,3)", "DeletableEdge(1,4)", "TooSmall" or "None".
std::string describe(const Witness& witness);

/// Re-runs the sub-check the witness points at; true if it reproduces the failure.
bool witness_rechecks(const Graph& g, const Witness& witness);

/// First failing pair in lexicographic order is reported.
CertificateReport is_bicritical(const Graph& g);
CertificateReport is_three_connected(const Graph& g);
CertificateReport is_brick(const Graph& g);
CertificateReport is_minimal_brick(const Graph& g);

struct DegreeStats {
  std::vector<std::size_t> histogram;  // histogram[d] = #vertices of degree d
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t n_deg3 = 0;
  std::size_t n_deg_le4 = 0;
  double avg_degree = 0.0;

  std::size_t count(std::size_t degree) const { return degree < histogram.size() ? histogram[degree] : 0; }
};

DegreeStats degree_stats(const Graph& g);

struct BoundsReport {
  DegreeStats stats;
  bool deg_le4_ok = false;  // 9 * n_{deg<=4} >= n
  bool deg3_ok = false;     // n_deg3 >= 3
  bool avg_ok = false;      // 2m/n <= 5 - 7/n, or an exception graph
  bool avg_bound_holds = false;  // 2m/n <= 5 - 7/n, ignoring the exceptions
  /// Name of the exception graph when the average-degree bound is waived.
  std::string avg_exception;

  bool all_ok() const { return deg_le4_ok && deg3_ok && avg_ok; }
};

/// Degree bounds for minimal bricks. Throws NotMinimalBrick unless g is one
/// (pass `check_minimal = false` when the caller already knows).
BoundsReport verify_paper_bounds(const Graph& g, bool check_minimal = true);

}  // namespace brickforge
