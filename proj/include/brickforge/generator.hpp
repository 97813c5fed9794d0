#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brickforge/canonical.hpp"
#include "brickforge/extensions.hpp"
#include "brickforge/graph.hpp"
#include "brickforge/sequences.hpp"

namespace brickforge {

/// Largest max_n accepted by generate_bricks; BRICKFORGE_CAP overrides it.
inline constexpr int kDefaultGenerateCap = 14;
int generate_cap();

struct GenerateOptions {
  int max_n = 8;
  VariantMask variants = kAllVariants;
  /// Emit only minimal bricks.
  bool minimal_only = true;
  /// With minimal_only, expand only minimal intermediates. Turning this off
  /// keeps every brick in the frontier and filters at emission.
  bool prune_nonminimal = true;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

struct GeneratedBrick {
  CanonicalForm form;
  /// Canonically labelled representative.
  Graph graph;
  /// Replays to a graph isomorphic to `graph`. Empty for the Petersen graph,
  /// which is added without a sequence.
  std::optional<SequenceRecipe> recipe;
  /// Some step of the recipe used a vertex identification.
  bool uses_identifications = false;
};

struct GenerateResult {
  /// Sorted by canonical form (hence by order first).
  std::vector<GeneratedBrick> bricks;
  std::size_t expanded = 0;
  std::size_t specs_applied = 0;
};

/// Breadth-first closure of {K4, prism} under strict extensions up to max_n
/// vertices, deduplicated by canonical form. Throws BadParameter for odd or
/// too small max_n and CapExceeded beyond generate_cap().
GenerateResult generate_bricks(const GenerateOptions& options);

/// Invoked as (labelled graphs done, total labelled graphs).
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

/// Minimal bricks on exactly n vertices found by sweeping every labelled graph
/// with minimum degree 3. Odd n yields the empty set; n = 8 requires
/// `allow_long`; anything else beyond 6 throws TooLarge.
std::vector<CanonicalForm> exhaustive_minimal_bricks(int n, bool allow_long = false, const ProgressFn& progress = {});

struct CorpusViolation {
  std::size_t index = 0;
  std::string bound;  // "deg_le4", "deg3" or "avg"
};

struct CorpusReport {
  std::size_t graphs = 0;
  std::size_t minimal_bricks = 0;
  std::size_t skipped = 0;  // not minimal bricks
  std::size_t exceptions = 0;
  std::vector<CorpusViolation> violations;
  /// Extremes over the minimal bricks; unset when there are none.
  std::optional<Rational> min_deg_le4_fraction;
  std::optional<Rational> min_deg3_fraction;
  std::optional<Rational> max_deg_ge5_fraction;
};

CorpusReport verify_corpus(std::span<const Graph> graphs, unsigned jobs = 0);

std::string format_corpus_report(const CorpusReport& report);

}  // namespace brickforge
