#include "brickforge/error.hpp"
#include "brickforge/sequences.hpp"

namespace brickforge {
namespace {

constexpr VertexId kPeriod = 6;

VertexId shifted(VertexId v, VertexId by) { return v >= kPeriod ? v + by : v; }

template <class Op>
Op shift(Op op, VertexId by) {
  for (auto* p : {&op.u, &op.v, &op.x, &op.y}) *p = shifted(*p, by);
  return op;
}

void append_ladder_blocks(SequenceRecipe& recipe, int r) {
  recipe.specs.push_back({Quasiquartic{0, 1, 2, 5}, {}});
  recipe.specs.push_back({Quasiquadratic{0, 1, 5, 8}, {}});
  for (int k = 2; k <= r; ++k) {
    const auto by = static_cast<VertexId>(kPeriod * (k - 2));
    recipe.specs.push_back({shift(Quasiquartic{6, 7, 10, 11}, by), {}});
    recipe.specs.push_back({shift(Quasiquadratic{6, 12, 13, 14}, by), {}});
  }
}

}  // namespace

SequenceRecipe triple_ladder_recipe(int r) {
  if (r < 1) throw Error(ErrorKind::BadParameter, "triple ladder needs r >= 1");
  SequenceRecipe recipe;
  recipe.start = StartGraph::Prism;
  append_ladder_blocks(recipe, r);
  return recipe;
}

SequenceRecipe ladder_plus_recipe(int r) {
  if (r < 3) throw Error(ErrorKind::BadParameter, "ladder plus needs r >= 3");
  SequenceRecipe recipe = triple_ladder_recipe(r);
  recipe.specs.push_back({Quasiquadratic{1, 14, 20, 13}, {}});
  recipe.specs.push_back({Quasiquadratic{13, 14, 1, 20}, {}});
  return recipe;
}

}  // namespace brickforge
