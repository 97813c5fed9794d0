#include "brickforge/sequences.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "brickforge/brick_check.hpp"
#include "brickforge/error.hpp"
#include "brickforge/named_graphs.hpp"

namespace brickforge {
namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InternalCheckFailed, what);
}

std::string strip_kind(const Error& e) {
  std::string what = e.what();
  auto colon = what.find(": ");
  return colon == std::string::npos ? what : what.substr(colon + 2);
}

}  // namespace

std::string_view to_string(StartGraph start) { return start == StartGraph::K4 ? "K4" : "PRISM"; }

Graph start_graph(StartGraph start) {
  return named_graph(start == StartGraph::K4 ? NamedGraph::k4() : NamedGraph::prism());
}

BrickSequence build(StartGraph start, const std::vector<ExtensionSpec>& specs) {
  BrickSequence seq;
  seq.start = start;
  seq.graphs.push_back(start_graph(start));
  for (std::size_t i = 0; i < specs.size(); ++i) {
    std::pair<Graph, ExtensionRecord> next;
    try {
      next = apply(seq.graphs.back(), specs[i]);
    } catch (const Error& e) {
      throw StepError(e.kind(), i + 1, strip_kind(e));
    }
    auto report = is_brick(next.first);
    if (!report) {
      throw StepError(ErrorKind::NotABrick, i + 1,
                      serialize_spec(specs[i]) + " produced a non-brick, " + describe(report.witness));
    }
    seq.graphs.push_back(std::move(next.first));
    seq.steps.push_back(std::move(next.second));
  }
  return seq;
}

bool SequenceStats::density_relations_hold() const {
  return 2 * eps[0] == 3 * nu[0] && 2 * eps[1] <= 3 * nu[1] && eps[2] - eps2c == 2 * (nu[2] - nu2c) &&
         2 * eps2c == 5 * nu2c && eps[3] <= 2 * nu[3];
}

SequenceStats stats(const BrickSequence& seq) {
  SequenceStats s;
  s.nu[0] = static_cast<std::int64_t>(seq.graphs.front().num_vertices());
  s.eps[0] = static_cast<std::int64_t>(seq.graphs.front().num_edges());
  for (const auto& rec : seq.steps) {
    const auto cls = static_cast<int>(class_of(rec.kind));
    s.nu[cls] += rec.delta_n;
    s.eps[cls] += rec.delta_m;
    if (rec.kind == ExtensionKind::Quasiquadratic && rec.conservative) {
      s.nu2c += rec.delta_n;
      s.eps2c += rec.delta_m;
    }
  }
  ensure(s.total_vertices() == static_cast<std::int64_t>(seq.last().num_vertices()) &&
             s.total_edges() == static_cast<std::int64_t>(seq.last().num_edges()),
         "vertex/edge totals disagree with the last graph");
  ensure(s.density_relations_hold(), "density relation violated");
  return s;
}

std::string format_stats(const SequenceStats& s, const Graph& last) {
  std::ostringstream out;
  for (int i = 0; i < 4; ++i) out << "nu" << i << '=' << s.nu[i] << '\n';
  out << "nu2c=" << s.nu2c << '\n';
  for (int i = 0; i < 4; ++i) out << "eps" << i << '=' << s.eps[i] << '\n';
  out << "eps2c=" << s.eps2c << '\n';
  out << "n=" << last.num_vertices() << '\n';
  out << "m=" << last.num_edges() << '\n';
  const bool identity = s.total_vertices() == static_cast<std::int64_t>(last.num_vertices()) &&
                        s.total_edges() == static_cast<std::int64_t>(last.num_edges());
  out << "identity=" << (identity ? "ok" : "FAIL") << '\n';
  out << "relations=" << (s.density_relations_hold() ? "ok" : "FAIL") << '\n';
  return out.str();
}

LotsOfQuadReport check_lotsofquad(const BrickSequence& seq, Rational delta) {
  const Graph& g = seq.last();
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  const auto m = static_cast<std::int64_t>(g.num_edges());
  if (delta <= 0) throw Error(ErrorKind::PreconditionUnmet, "delta must be positive");
  if (Rational(2 * m, n) < 4 + delta) {
    throw Error(ErrorKind::PreconditionUnmet, "average degree " + std::to_string(2.0 * m / n) + " is below 4+delta");
  }
  if (!is_minimal_brick(g)) throw Error(ErrorKind::PreconditionUnmet, "last graph is not a minimal brick");
  LotsOfQuadReport r;
  r.delta = delta;
  r.nu2c = stats(seq).nu2c;
  r.n = n;
  r.holds = Rational(r.nu2c) >= delta * n;
  return r;
}

HighDegreeReport high_average_degree_report(const Graph& g) {
  HighDegreeReport r;
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  if (n == 0) return r;
  const auto st = degree_stats(g);
  r.delta = Rational(2 * static_cast<std::int64_t>(g.num_edges()), n) - 4;
  r.bound = (4 * r.delta - 3) * n;
  r.n_deg3 = static_cast<std::int64_t>(st.n_deg3);
  r.applicable = r.delta > 0 && 4 * r.delta - 3 > 0;
  r.holds = !r.applicable || Rational(r.n_deg3) >= r.bound;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<VertexId> drop_ids(const std::vector<VertexId>& xs, VertexId p, VertexId q) {
  std::vector<VertexId> out;
  for (VertexId x : xs) {
    if (x != p && x != q) out.push_back(x);
  }
  return out;
}

void drop_from_split(BisplitSpec& s, VertexId p, VertexId q) {
  s.side1 = drop_ids(s.side1, p, q);
  s.side2 = drop_ids(s.side2, p, q);
}

// recC refers to B's ids; A's ids are the same minus p, q (the two largest).
ExtensionSpec transport_to_a(const ExtensionSpec& spec, VertexId p, VertexId q) {
  ExtensionSpec out = spec;
  std::visit(
      [&](auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, StrictLinear2>) {
          drop_from_split(op.split_v, p, q);
          drop_from_split(op.split_u, p, q);
        } else if constexpr (std::is_same_v<T, StrictLinear3>) {
          drop_from_split(op.split, p, q);
          op.v1_side = drop_ids(op.v1_side, p, q);
          op.v2_side = drop_ids(op.v2_side, p, q);
        } else if constexpr (std::is_same_v<T, Quasiquadratic> || std::is_same_v<T, Quasiquartic>) {
        } else {
          drop_from_split(op.split, p, q);
        }
      },
      out.op);
  return out;
}

}  // namespace

ReorderResult reorder(const Graph& a, const ExtensionRecord& rec_b, const ExtensionRecord& rec_c) {
  if (rec_b.kind != ExtensionKind::Quasiquadratic || !rec_b.conservative) {
    throw Error(ErrorKind::PreconditionUnmet, "first step must be conservative quasiquadratic");
  }
  const VertexId p = rec_b.new_vertices.at(0);
  const VertexId q = rec_b.new_vertices.at(1);
  for (VertexId f : rec_c.fundament) {
    if (f == p || f == q) {
      throw Error(ErrorKind::FundamentConflict, "vertex " + std::to_string(f) + " is new in A->B and lies in the fundament of B->C");
    }
  }
  auto [b, rec_b_check] = apply(a, rec_b.spec);
  ensure(rec_b_check.conservative, "A->B is not conservative");
  auto [c, rec_c_check] = apply(b, rec_c.spec);

  ReorderResult out;
  out.c = c;
  const VertexId pq[] = {p, q};
  auto [b_prime, remap] = without_vertices(c, pq);
  ensure(static_cast<bool>(is_brick(b_prime)), "C - {p,q} is not a brick");

  auto [b_prime_check, rec_ab] = apply(a, transport_to_a(rec_c.spec, p, q));
  ensure(b_prime_check == b_prime, "A -> C-{p,q} does not replay recC's extension");
  ensure(rec_ab.kind == rec_c_check.kind, "A -> B' changed the extension variant");
  out.b_prime = std::move(b_prime);
  out.a_to_b_prime = std::move(rec_ab);

  // p, q each have one old neighbour pair in C; try the role assignments.
  auto others = [&](VertexId w, VertexId skip) {
    std::vector<VertexId> nb;
    for (VertexId z : c.neighbors(w)) {
      if (z != skip) nb.push_back(remap[static_cast<std::size_t>(z)]);
    }
    return nb;
  };
  const auto np = others(p, q);
  const auto nq = others(q, p);
  ensure(np.size() == 2 && nq.size() == 2 && c.has_edge(p, q), "p, q do not form a quadratic pair in C");

  const auto nc = static_cast<VertexId>(c.num_vertices());
  std::vector<VertexId> perm(c.num_vertices());
  for (VertexId w = 0; w < nc; ++w) {
    perm[static_cast<std::size_t>(w)] = remap[static_cast<std::size_t>(w)];
  }
  perm[static_cast<std::size_t>(p)] = nc - 2;
  perm[static_cast<std::size_t>(q)] = nc - 1;
  const Graph c_relabelled = relabel(c, perm);

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Quasiquadratic op{np[i], nq[j], np[1 - i], nq[1 - j]};
      if (out.b_prime.has_edge(op.u, op.v)) continue;
      ExtensionSpec spec{op, {}};
      try {
        auto [c_check, rec] = apply(out.b_prime, spec);
        if (c_check != c_relabelled) continue;
        ensure(rec.conservative && rec.new_vertices == std::vector<VertexId>{nc - 2, nc - 1},
               "B' -> C is not conservative quasiquadratic");
        out.b_prime_to_c = std::move(rec);
        out.c_relabel = std::move(perm);
        return out;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::InternalCheckFailed) throw;
      }
    }
  }
  throw Error(ErrorKind::InternalCheckFailed, "B' -> C is not a conservative quasiquadratic extension");
}

QuadOnQuadResult build_quadonquad(const Graph& g, const Quasiquadratic& first, const Quasiquadratic& second) {
  if (!is_brick(g)) throw Error(ErrorKind::NotABrick, "base graph is not a brick");
  QuadOnQuadResult out;
  std::tie(out.g_prime, out.first) = apply(g, ExtensionSpec{first, {}});
  if (!out.first.conservative) {
    throw Error(ErrorKind::SpecInvariantViolated, "first extension must be conservative (u, v non-adjacent)");
  }
  const VertexId new_u = out.first.new_vertices[0];
  const VertexId new_v = out.first.new_vertices[1];
  const auto& f2 = second;
  auto in_second = [&](VertexId w) { return w == f2.u || w == f2.v || w == f2.x || w == f2.y; };
  if (!in_second(new_u) && !in_second(new_v)) {
    throw Error(ErrorKind::FundamentMismatch, "second fundament uses neither new vertex of the first step");
  }
  std::tie(out.g_double_prime, out.second) = apply(out.g_prime, ExtensionSpec{second, {}});
  if (!out.second.conservative) {
    throw Error(ErrorKind::SpecInvariantViolated, "second extension must be conservative (u, v non-adjacent)");
  }
  ensure(static_cast<bool>(is_brick(out.g_double_prime)), "G'' is not a brick");

  const bool use_u = in_second(new_u);
  out.u_prime = use_u ? new_u : new_v;
  out.v_prime = use_u ? new_v : new_u;
  out.u = use_u ? first.u : first.v;
  out.x = use_u ? first.x : first.y;
  // Name the second fundament {u', r, s, t}: r shares a new vertex with u'.
  if (out.u_prime == f2.u || out.u_prime == f2.x) {
    out.r = out.u_prime == f2.u ? f2.x : f2.u;
    out.s = f2.v;
    out.t = f2.y;
  } else {
    out.r = out.u_prime == f2.v ? f2.y : f2.v;
    out.s = f2.u;
    out.t = f2.x;
  }
  auto in_st = [&](VertexId w) { return w == out.s || w == out.t; };
  out.v_prime_outside_st = !in_st(out.v_prime);
  out.separation_excluded = out.v_prime_outside_st && !in_st(out.x) &&
                            !(in_st(out.u_prime) && (out.r == out.x || out.r == out.v_prime));

  const Graph& gpp = out.g_double_prime;
  const Graph minus = without_edge(gpp, out.u, out.u_prime);
  out.minus_uu_bicritical = static_cast<bool>(is_bicritical(minus));
  out.minus_uu_three_connected = static_cast<bool>(is_three_connected(minus));
  out.minimal = static_cast<bool>(is_minimal_brick(gpp));
  ensure(!out.minimal, "G'' is a minimal brick");
  if (out.v_prime_outside_st) ensure(out.minus_uu_bicritical, "G'' - uu' is not bicritical");
  if (out.separation_excluded) ensure(out.minus_uu_three_connected, "G'' - uu' is not 3-connected");

  auto leaves_brick = [&](VertexId a, VertexId b) {
    return gpp.has_edge(a, b) && static_cast<bool>(is_brick(without_edge(gpp, a, b)));
  };
  if (out.minus_uu_bicritical && out.minus_uu_three_connected) {
    out.witness = Edge(out.u, out.u_prime);
  } else if (leaves_brick(out.u_prime, out.v_prime)) {
    out.witness = Edge(out.u_prime, out.v_prime);
  } else {
    ensure(leaves_brick(out.x, out.u_prime), "no deletable edge among uu', u'v', xu'");
    out.witness = Edge(out.x, out.u_prime);
  }
  return out;
}

// ---------------------------------------------------------------------------

SequenceRecipe read_sequence(std::istream& in) {
  SequenceRecipe recipe;
  std::string line;
  std::size_t line_no = 0;
  bool have_start = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(' ');
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_start) {
      if (line == "start K4") {
        recipe.start = StartGraph::K4;
      } else if (line == "start PRISM") {
        recipe.start = StartGraph::Prism;
      } else {
        throw ParseError(line_no, 1, "expected 'start K4' or 'start PRISM'");
      }
      have_start = true;
      continue;
    }
    try {
      recipe.specs.push_back(parse_spec(line));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.column(), strip_kind(e));
    }
  }
  if (!have_start) throw ParseError(line_no + 1, 1, "missing start line");
  return recipe;
}

void write_sequence(std::ostream& out, const SequenceRecipe& recipe) {
  out << "start " << to_string(recipe.start) << '\n';
  for (const auto& spec : recipe.specs) out << serialize_spec(spec) << '\n';
}

}  // namespace brickforge
