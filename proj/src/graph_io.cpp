#include "brickforge/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <string>

#include "brickforge/error.hpp"

namespace brickforge {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::int64_t parse_int(const Token& tok, std::size_t line) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) {
    throw ParseError(line, tok.column, "expected non-negative integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

constexpr std::size_t kMaxVertices = 1u << 20;

}  // namespace

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph read_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && split_line(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, 1, "missing header 'n m'");

  auto header = split_line(lines[0]);
  if (header.size() != 2) throw ParseError(1, 1, "header must be 'n m'");
  std::int64_t n = parse_int(header[0], 1);
  std::int64_t m = parse_int(header[1], 1);
  if (static_cast<std::size_t>(n) > kMaxVertices) throw ParseError(1, header[0].column, "vertex count too large");
  if (static_cast<std::int64_t>(lines.size()) - 1 != m) {
    throw ParseError(lines.size(), 1,
                     "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  Graph g(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    auto toks = split_line(lines[i]);
    if (toks.size() != 2) throw ParseError(line_no, 1, "edge line must be 'u v'");
    std::int64_t u = parse_int(toks[0], line_no);
    std::int64_t v = parse_int(toks[1], line_no);
    if (u >= n) throw ParseError(line_no, toks[0].column, "vertex " + std::to_string(u) + " out of range");
    if (v >= n) throw ParseError(line_no, toks[1].column, "vertex " + std::to_string(v) + " out of range");
    if (u == v) throw ParseError(line_no, toks[0].column, "loop edge");
    if (g.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
      throw ParseError(line_no, toks[0].column, "duplicate edge");
    }
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j)) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + 63);
  return out;
}

Graph read_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t offset = 0;
  if (text.substr(0, kHeader.size()) == kHeader) offset = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError(1, i, "unexpected end of graph6 data");
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError(1, i, "byte outside graph6 range");
    return c - 63;
  };

  std::size_t pos = offset;
  std::size_t n = 0;
  int first = byte_at(pos);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
    pos += 1;
  } else if (byte_at(pos + 1) < 63) {
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(byte_at(pos + k));
    pos += 4;
  } else {
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::size_t>(byte_at(pos + k));
    pos += 8;
  }
  if (n > kMaxVertices) throw ParseError(1, offset, "vertex count too large");

  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) {
    throw ParseError(1, pos, "expected " + std::to_string(byte_count) + " data bytes, found " +
                                 std::to_string(text.size() - pos));
  }
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = byte_at(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  if (k % 6 != 0) {
    int byte = byte_at(pos + k / 6);
    if ((byte & ((1 << (6 - k % 6)) - 1)) != 0) throw ParseError(1, pos + k / 6, "non-zero padding bits");
  }
  return g;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(read_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.column(), e.what());
      }
    }
    pos = nl + 1;
  }
  return out;
}

std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::EdgeList ? write_edge_list(g) : write_graph6(g) + "\n";
}

Graph read_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? read_edge_list(text) : read_graph6(text);
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "graph6") return GraphFormat::Graph6;
  throw Error(ErrorKind::BadParameter, "unknown format '" + std::string(name) + "'");
}

}  // namespace brickforge
