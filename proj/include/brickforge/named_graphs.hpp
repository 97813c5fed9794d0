#pragma once

#include <string>
#include <string_view>

#include "brickforge/graph.hpp"

namespace brickforge {

struct NamedGraph {
  enum class Family { K4, Prism, Petersen, Wheel, TripleLadder, LadderPlus };

  Family family = Family::K4;
  /// Order of the wheel, or the rung/gadget count of the ladder families.
  int param = 0;

  static NamedGraph k4() { return {Family::K4, 0}; }
  static NamedGraph prism() { return {Family::Prism, 0}; }
  static NamedGraph petersen() { return {Family::Petersen, 0}; }
  /// (k-1)-cycle plus a hub, so wheel(4) is K4.
  static NamedGraph wheel(int k) { return {Family::Wheel, k}; }
  static NamedGraph triple_ladder(int r = kTripleLadderDefault) { return {Family::TripleLadder, r}; }
  static NamedGraph ladder_plus(int r = kLadderPlusDefault) { return {Family::LadderPlus, r}; }

  static constexpr int kTripleLadderDefault = 3;
  static constexpr int kLadderPlusDefault = 3;

  friend bool operator==(const NamedGraph&, const NamedGraph&) = default;
};

/// Throws BadParameter for wheel orders below 4 or ladder sizes below 1
/// (below 3 for LadderPlus).
Graph named_graph(const NamedGraph& name);

/// "K4", "Prism", "Petersen", "Wheel(6)", "TripleLadder(3)", "LadderPlus".
std::string to_string(const NamedGraph& name);
NamedGraph parse_named_graph(std::string_view text);

}  // namespace brickforge
