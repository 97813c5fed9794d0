#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "brickforge/graph.hpp"

namespace brickforge {

enum class GraphFormat { EdgeList, Graph6 };

/// EdgeList: header "n m", then m lines "u v" (0-indexed, LF-terminated).
/// Edges are written in lexicographic order with u < v.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::string_view text);

/// Standard graph6 encoding, without the trailing newline.
std::string write_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and a trailing newline.
Graph read_graph6(std::string_view text);
/// One graph per non-empty line.
std::vector<Graph> read_graph6_lines(std::string_view text);

std::string write_graph(const Graph& g, GraphFormat format);
Graph read_graph(std::string_view text, GraphFormat format);

GraphFormat parse_graph_format(std::string_view name);

}  // namespace brickforge
