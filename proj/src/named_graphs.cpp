#include "brickforge/named_graphs.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <optional>

#include "brickforge/error.hpp"
#include "brickforge/sequences.hpp"

namespace brickforge {
namespace {

Graph wheel_graph(int k) {
  const auto rim = static_cast<VertexId>(k - 1);
  Graph g(static_cast<std::size_t>(k));
  for (VertexId i = 0; i < rim; ++i) {
    g.add_edge(i, (i + 1) % rim);
    g.add_edge(i, rim);
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (VertexId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

// Ladder graphs are replayed from their sequence recipes; cache by name.
Graph cached_recipe(const NamedGraph& name) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Graph> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(static_cast<int>(name.family), name.param);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const SequenceRecipe recipe = name.family == NamedGraph::Family::TripleLadder ? triple_ladder_recipe(name.param)
                                                                                 : ladder_plus_recipe(name.param);
  Graph g = build(recipe.start, recipe.specs).graphs.back();
  cache.emplace(key, g);
  return g;
}

}  // namespace

Graph named_graph(const NamedGraph& name) {
  using F = NamedGraph::Family;
  switch (name.family) {
    case F::K4: return wheel_graph(4);
    case F::Prism:
      return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    case F::Petersen: return petersen_graph();
    case F::Wheel:
      if (name.param < 4) throw Error(ErrorKind::BadParameter, "wheel order must be at least 4");
      return wheel_graph(name.param);
    case F::TripleLadder:
    case F::LadderPlus:
      if (name.param < 1) throw Error(ErrorKind::BadParameter, "ladder size must be at least 1");
      return cached_recipe(name);
  }
  throw Error(ErrorKind::BadParameter, "unknown named graph");
}

std::string to_string(const NamedGraph& name) {
  using F = NamedGraph::Family;
  switch (name.family) {
    case F::K4: return "K4";
    case F::Prism: return "Prism";
    case F::Petersen: return "Petersen";
    case F::Wheel: return "Wheel(" + std::to_string(name.param) + ")";
    case F::TripleLadder: return "TripleLadder(" + std::to_string(name.param) + ")";
    case F::LadderPlus: return "LadderPlus(" + std::to_string(name.param) + ")";
  }
  return "?";
}

NamedGraph parse_named_graph(std::string_view text) {
  auto bad = [&]() -> Error { return Error(ErrorKind::BadParameter, "unknown graph name '" + std::string(text) + "'"); };
  std::string_view base = text;
  std::optional<int> param;
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw bad();
    base = text.substr(0, open);
    std::string_view digits = text.substr(open + 1, text.size() - open - 2);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) throw bad();
    param = value;
  }
  if (base == "K4" && !param) return NamedGraph::k4();
  if (base == "Prism" && !param) return NamedGraph::prism();
  if (base == "Petersen" && !param) return NamedGraph::petersen();
  if (base == "Wheel" && param) return NamedGraph::wheel(*param);
  if (base == "TripleLadder") return NamedGraph::triple_ladder(param.value_or(NamedGraph::kTripleLadderDefault));
  if (base == "LadderPlus") return NamedGraph::ladder_plus(param.value_or(NamedGraph::kLadderPlusDefault));
  throw bad();
}

}  // namespace brickforge
