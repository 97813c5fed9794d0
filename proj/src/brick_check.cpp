#include "brickforge/brick_check.hpp"

#include <array>
#include <string>

#include "brickforge/canonical.hpp"
#include "brickforge/error.hpp"
#include "brickforge/matching.hpp"
#include "brickforge/named_graphs.hpp"

namespace brickforge {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool connected_without(const Graph& g, VertexId a, VertexId b, std::vector<char>& seen,
                       std::vector<VertexId>& stack) {
  const std::size_t n = g.num_vertices();
  std::fill(seen.begin(), seen.end(), 0);
  seen[static_cast<std::size_t>(a)] = 1;
  seen[static_cast<std::size_t>(b)] = 1;
  VertexId start = 0;
  while (seen[static_cast<std::size_t>(start)]) ++start;
  stack.assign(1, start);
  seen[static_cast<std::size_t>(start)] = 1;
  std::size_t reached = 3;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(u)) {
      auto wi = static_cast<std::size_t>(w);
      if (!seen[wi]) {
        seen[wi] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

std::string describe(const Witness& witness) {
  return std::visit(Overloaded{
                        [](const NoWitness&) { return std::string("None"); },
                        [](const BadPair& p) {
                          return "BadPair(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
                        },
                        [](const CutPair& p) {
                          return "CutPair(" + std::to_string(p.w) + "," + std::to_string(p.z) + ")";
                        },
                        [](const DeletableEdge& d) {
                          return "DeletableEdge(" + std::to_string(d.edge.u) + "," + std::to_string(d.edge.v) + ")";
                        },
                        [](const TooSmall&) { return std::string("TooSmall"); },
                    },
                    witness);
}

bool witness_rechecks(const Graph& g, const Witness& witness) {
  return std::visit(Overloaded{
                        [](const NoWitness&) { return false; },
                        [&](const BadPair& p) {
                          const VertexId removed[] = {p.u, p.v};
                          return p.u != p.v && !has_perfect_matching(without_vertices(g, removed).first);
                        },
                        [&](const CutPair& p) {
                          const VertexId removed[] = {p.w, p.z};
                          return p.w != p.z && !is_connected(without_vertices(g, removed).first);
                        },
                        [&](const DeletableEdge& d) {
                          return g.has_edge(d.edge.u, d.edge.v) &&
                                 is_brick(without_edge(g, d.edge.u, d.edge.v)).verdict;
                        },
                        [&](const TooSmall&) { return g.num_vertices() < 4; },
                    },
                    witness);
}

CertificateReport is_bicritical(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) return {false, TooSmall{}};
  if (n % 2 != 0) return {false, BadPair{0, 1}};
  for (VertexId u = 0; static_cast<std::size_t>(u) < n; ++u) {
    for (VertexId v = u + 1; static_cast<std::size_t>(v) < n; ++v) {
      const VertexId removed[] = {u, v};
      if (!has_perfect_matching_without(g, removed)) return {false, BadPair{u, v}};
    }
  }
  return {true, NoWitness{}};
}

CertificateReport is_three_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 4) return {false, TooSmall{}};
  std::vector<char> seen(n);
  std::vector<VertexId> stack;
  for (VertexId w = 0; static_cast<std::size_t>(w) < n; ++w) {
    for (VertexId z = w + 1; static_cast<std::size_t>(z) < n; ++z) {
      if (!connected_without(g, w, z, seen, stack)) return {false, CutPair{w, z}};
    }
  }
  return {true, NoWitness{}};
}

CertificateReport is_brick(const Graph& g) {
  CertificateReport bicritical = is_bicritical(g);
  if (!bicritical.verdict) return bicritical;
  return is_three_connected(g);
}

CertificateReport is_minimal_brick(const Graph& g) {
  CertificateReport brick = is_brick(g);
  if (!brick.verdict) return brick;
  for (const Edge& e : g.edges()) {
    // A degree-3 endpoint drops to degree 2, whose two neighbors then form a cut.
    if (g.degree(e.u) <= 3 || g.degree(e.v) <= 3) continue;
    Graph h = without_edge(g, e.u, e.v);
    if (!is_three_connected(h).verdict) continue;
    if (is_bicritical(h).verdict) return {false, DeletableEdge{e}};
  }
  return {true, NoWitness{}};
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  for (VertexId v = 0; static_cast<std::size_t>(v) < s.n; ++v) {
    std::size_t d = g.degree(v);
    if (d >= s.histogram.size()) s.histogram.resize(d + 1, 0);
    ++s.histogram[d];
    if (d == 3) ++s.n_deg3;
    if (d <= 4) ++s.n_deg_le4;
  }
  s.avg_degree = s.n == 0 ? 0.0 : 2.0 * static_cast<double>(s.m) / static_cast<double>(s.n);
  return s;
}

BoundsReport verify_paper_bounds(const Graph& g, bool check_minimal) {
  if (check_minimal) {
    CertificateReport minimal = is_minimal_brick(g);
    if (!minimal.verdict) throw Error(ErrorKind::NotMinimalBrick, describe(minimal.witness));
  }
  BoundsReport r;
  r.stats = degree_stats(g);
  const std::size_t n = r.stats.n;
  r.deg_le4_ok = 9 * r.stats.n_deg_le4 >= n;
  r.deg3_ok = r.stats.n_deg3 >= 3;
  // 2m/n <= 5 - 7/n  <=>  2m <= 5n - 7
  r.avg_bound_holds = 2 * r.stats.m + 7 <= 5 * n;
  r.avg_ok = r.avg_bound_holds;

  static const std::array<std::pair<const char*, CanonicalForm>, 4> kExceptions = {{
      {"Prism", canonical_form(named_graph(NamedGraph::prism()))},
      {"Wheel(4)", canonical_form(named_graph(NamedGraph::wheel(4)))},
      {"Wheel(6)", canonical_form(named_graph(NamedGraph::wheel(6)))},
      {"Wheel(8)", canonical_form(named_graph(NamedGraph::wheel(8)))},
  }};
  if (n <= 8) {
    const CanonicalForm form = canonical_form(g);
    for (const auto& [name, exception] : kExceptions) {
      if (form == exception) {
        r.avg_exception = name;
        r.avg_ok = true;
      }
    }
  }
  return r;
}

}  // namespace brickforge
