#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "brickforge/brick_check.hpp"
#include "brickforge/error.hpp"
#include "brickforge/named_graphs.hpp"
#include "brickforge/sequences.hpp"

namespace brickforge {
namespace {

ErrorKind error_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InternalCheckFailed;
}

ExtensionSpec spec(std::string_view line) { return parse_spec(line); }

bool every_deletion_breaks_three_connectivity(const Graph& g) {
  for (const auto& e : g.edges()) {
    if (is_three_connected(without_edge(g, e.u, e.v))) return false;
  }
  return true;
}

TEST(Build, TrivialSequences) {
  const auto k4 = build(StartGraph::K4, {});
  const auto s = stats(k4);
  EXPECT_EQ(s.nu[0], 4);
  EXPECT_EQ(s.eps[0], 6);
  EXPECT_EQ(k4.graphs.size(), 1u);

  const auto prism = stats(build(StartGraph::Prism, {}));
  EXPECT_EQ(prism.nu[0], 6);
  EXPECT_EQ(prism.eps[0], 9);
  EXPECT_EQ(2 * prism.eps[0], 3 * prism.nu[0]);
}

TEST(Build, ConservativeQuadraticOnPrism) {
  const auto seq = build(StartGraph::Prism, {spec("QQUAD u=0 v=4 x=1 y=5")});
  const auto s = stats(seq);
  EXPECT_EQ(s.nu2c, 2);
  EXPECT_EQ(s.eps2c, 5);
  EXPECT_EQ(s.nu[2], 2);
  EXPECT_EQ(s.eps[2], 5);
  EXPECT_TRUE(s.density_relations_hold());
}

TEST(Build, NonConservativeQuadratic) {
  const auto s = stats(build(StartGraph::Prism, {spec("QQUAD u=0 v=1 x=3 y=5")}));
  EXPECT_EQ(s.nu2c, 0);
  EXPECT_EQ(s.eps[2] - s.eps2c, 4);
  EXPECT_EQ(2 * (s.nu[2] - s.nu2c), 4);
}

TEST(Build, FailingStepIsReported) {
  try {
    (void)build(StartGraph::K4, {spec("QQUAD u=0 v=1 x=2 y=3"), spec("QQUAD u=0 v=0 x=2 y=3")});
    FAIL() << "expected StepError";
  } catch (const StepError& e) {
    EXPECT_EQ(e.step(), 2u);
    EXPECT_EQ(e.kind(), ErrorKind::SpecInvariantViolated);
  }
}

TEST(Stats, FormatIsStable) {
  const auto seq = build(StartGraph::Prism, {spec("QQUAD u=0 v=4 x=1 y=5")});
  const std::string text = format_stats(stats(seq), seq.last());
  EXPECT_EQ(text,
            "nu0=6\nnu1=0\nnu2=2\nnu3=0\nnu2c=2\neps0=9\neps1=0\neps2=5\neps3=0\neps2c=5\n"
            "n=8\nm=14\nidentity=ok\nrelations=ok\n");
}

TEST(Stats, IdentityAndRelationsOnMixedSequence) {
  std::vector<ExtensionSpec> specs = {spec("QQUART u=0 v=1 x=2 y=3"), spec("QQUAD u=0 v=7 x=1 y=2")};
  const Graph g = build(StartGraph::K4, specs).last();
  specs.push_back(enumerate_specs(g, variant_bit(ExtensionKind::StrictLinear1)).front());
  const auto seq = build(StartGraph::K4, specs);
  const auto s = stats(seq);
  EXPECT_EQ(s.total_vertices(), static_cast<std::int64_t>(seq.last().num_vertices()));
  EXPECT_EQ(s.total_edges(), static_cast<std::int64_t>(seq.last().num_edges()));
  EXPECT_EQ(s.nu[1], 2);
  EXPECT_EQ(s.eps[1], 3);
  EXPECT_TRUE(s.density_relations_hold());
}

TEST(TripleLadder, AlternatingSequenceFromPrism) {
  for (int r = 1; r <= 4; ++r) {
    const auto recipe = triple_ladder_recipe(r);
    ASSERT_EQ(recipe.start, StartGraph::Prism);
    const auto seq = build(recipe.start, recipe.specs);
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
      EXPECT_EQ(seq.steps[i].kind, i % 2 == 0 ? ExtensionKind::Quasiquartic : ExtensionKind::Quasiquadratic);
      EXPECT_TRUE(is_brick(seq.graphs[i + 1]));
    }
    const Graph& g = seq.last();
    EXPECT_EQ(g, named_graph(NamedGraph::triple_ladder(r)));
    EXPECT_EQ(g.num_vertices(), static_cast<std::size_t>(6 + 6 * r));
    EXPECT_EQ(3 * degree_stats(g).n_deg3, 2 * g.num_vertices());
    EXPECT_TRUE(is_minimal_brick(g));
    EXPECT_TRUE(every_deletion_breaks_three_connectivity(g));

    const auto s = stats(seq);
    EXPECT_EQ(s.nu[1], 0);
    EXPECT_EQ(s.nu[2], 2 * r);
    EXPECT_EQ(s.nu[3], 4 * r);
    EXPECT_EQ(s.total_vertices(), static_cast<std::int64_t>(g.num_vertices()));
  }
}

TEST(LadderPlus, DegreeSixFraction) {
  const Graph g = named_graph(NamedGraph::ladder_plus());
  const auto d = degree_stats(g);
  EXPECT_EQ(d.n, 28u);
  EXPECT_EQ(d.count(6), 4u);
  EXPECT_TRUE(is_minimal_brick(g));
  EXPECT_TRUE(every_deletion_breaks_three_connectivity(g));
  for (int r = 4; r <= 5; ++r) EXPECT_TRUE(is_minimal_brick(named_graph(NamedGraph::ladder_plus(r))));
  EXPECT_EQ(error_kind([] { (void)ladder_plus_recipe(2); }), ErrorKind::BadParameter);
  EXPECT_EQ(error_kind([] { (void)triple_ladder_recipe(0); }), ErrorKind::BadParameter);
}

TEST(LotsOfQuad, Preconditions) {
  const auto k4 = build(StartGraph::K4, {});
  EXPECT_EQ(error_kind([&] { (void)check_lotsofquad(k4, Rational(1, 10)); }), ErrorKind::PreconditionUnmet);
  EXPECT_EQ(error_kind([&] { (void)check_lotsofquad(k4, Rational(0)); }), ErrorKind::PreconditionUnmet);

  const auto recipe = triple_ladder_recipe(3);
  const auto ladder = build(recipe.start, recipe.specs);
  EXPECT_LT(degree_stats(ladder.last()).avg_degree, 4.5);
  EXPECT_EQ(error_kind([&] { (void)check_lotsofquad(ladder, Rational(1, 2)); }), ErrorKind::PreconditionUnmet);

  const auto nonminimal = build(StartGraph::Prism, {spec("QQUAD u=0 v=4 x=1 y=5")});
  EXPECT_EQ(error_kind([&] { (void)check_lotsofquad(nonminimal, Rational(1, 100)); }),
            ErrorKind::PreconditionUnmet);
}

TEST(HighDegree, NotApplicableBelowFourAndThreeQuarters) {
  const auto k4 = high_average_degree_report(named_graph(NamedGraph::k4()));
  EXPECT_FALSE(k4.applicable);
  EXPECT_TRUE(k4.holds);
  EXPECT_EQ(k4.delta, Rational(-1));
  const auto ladder = high_average_degree_report(named_graph(NamedGraph::triple_ladder()));
  EXPECT_FALSE(ladder.applicable);
  EXPECT_EQ(ladder.n_deg3, 16);
}

TEST(Reorder, QuarticAfterConservativeQuadratic) {
  const Graph a = named_graph(NamedGraph::prism());
  const auto [b, rec_b] = apply(a, spec("QQUAD u=0 v=4 x=1 y=5"));
  const auto [c, rec_c] = apply(b, spec("QQUART u=0 v=1 x=3 y=4"));
  const auto r = reorder(a, rec_b, rec_c);
  EXPECT_EQ(r.b_prime.num_vertices(), c.num_vertices() - 2);
  EXPECT_TRUE(is_brick(r.b_prime));
  EXPECT_EQ(r.a_to_b_prime.kind, ExtensionKind::Quasiquartic);
  EXPECT_EQ(r.b_prime_to_c.kind, ExtensionKind::Quasiquadratic);
  EXPECT_TRUE(r.b_prime_to_c.conservative);
  EXPECT_EQ(r.b_prime_to_c.delta_n, 2);
  EXPECT_EQ(r.b_prime_to_c.delta_m, 5);
  EXPECT_EQ(r.c_relabel[6], static_cast<VertexId>(c.num_vertices() - 2));
  EXPECT_EQ(r.c_relabel[7], static_cast<VertexId>(c.num_vertices() - 1));
  EXPECT_EQ(r.c, c);
  const Graph c_prime = relabel(c, r.c_relabel);
  EXPECT_EQ(apply(r.b_prime, r.b_prime_to_c.spec).first, c_prime);
}

TEST(Reorder, ConservativeQuadraticPair) {
  const Graph a = named_graph(NamedGraph::prism());
  const auto [b, rec_b] = apply(a, spec("QQUAD u=0 v=4 x=1 y=5"));
  const auto [c, rec_c] = apply(b, spec("QQUAD u=2 v=3 x=1 y=5"));
  ASSERT_TRUE(rec_c.conservative);
  const auto r = reorder(a, rec_b, rec_c);
  EXPECT_EQ(r.a_to_b_prime.kind, ExtensionKind::Quasiquadratic);
  EXPECT_TRUE(r.a_to_b_prime.conservative);
  EXPECT_EQ(r.b_prime_to_c.delta_m, 5);
}

TEST(Reorder, Preconditions) {
  const Graph a = named_graph(NamedGraph::prism());
  const auto [b, rec_b] = apply(a, spec("QQUAD u=0 v=4 x=1 y=5"));
  const auto [c, rec_c] = apply(b, spec("QQUART u=6 v=1 x=3 y=4"));
  EXPECT_EQ(error_kind([&] { (void)reorder(a, rec_b, rec_c); }), ErrorKind::FundamentConflict);

  const auto [b2, rec_b2] = apply(a, spec("QQUAD u=0 v=1 x=3 y=5"));
  const auto [c2, rec_c2] = apply(b2, spec("QQUART u=0 v=2 x=3 y=4"));
  EXPECT_EQ(error_kind([&] { (void)reorder(a, rec_b2, rec_c2); }), ErrorKind::PreconditionUnmet);
}

TEST(QuadOnQuad, PrismInstance) {
  const Graph g = named_graph(NamedGraph::prism());
  const auto r = build_quadonquad(g, {0, 4, 1, 5}, {6, 3, 2, 4});
  EXPECT_EQ(r.u_prime, 6);
  EXPECT_EQ(r.v_prime, 7);
  EXPECT_EQ(r.u, 0);
  EXPECT_EQ(r.x, 1);
  EXPECT_EQ(r.r, 2);
  EXPECT_TRUE(r.v_prime_outside_st);
  EXPECT_TRUE(r.separation_excluded);
  EXPECT_TRUE(r.minus_uu_bicritical);
  EXPECT_TRUE(r.minus_uu_three_connected);
  EXPECT_FALSE(r.minimal);
  EXPECT_EQ(r.witness, Edge(0, 6));
  EXPECT_TRUE(is_brick(without_edge(r.g_double_prime, 0, 6)));
}

TEST(QuadOnQuad, VPrimeInSecondPairGivesUPrimeVPrimeWitness) {
  const Graph g = named_graph(NamedGraph::prism());
  const auto r = build_quadonquad(g, {0, 4, 1, 5}, {6, 3, 2, 7});
  EXPECT_EQ(r.t, 7);
  EXPECT_FALSE(r.v_prime_outside_st);
  EXPECT_FALSE(r.minimal);
  EXPECT_TRUE(is_brick(without_edge(r.g_double_prime, r.witness.u, r.witness.v)));
}

TEST(QuadOnQuad, Errors) {
  const Graph g = named_graph(NamedGraph::prism());
  EXPECT_EQ(error_kind([&] { (void)build_quadonquad(g, {0, 4, 1, 5}, {0, 4, 2, 3}); }),
            ErrorKind::FundamentMismatch);
  EXPECT_EQ(error_kind([&] { (void)build_quadonquad(g, {0, 1, 3, 5}, {6, 3, 2, 4}); }),
            ErrorKind::SpecInvariantViolated);
  EXPECT_EQ(error_kind([&] { (void)build_quadonquad(g, {0, 4, 1, 5}, {6, 0, 2, 4}); }),
            ErrorKind::SpecInvariantViolated);
}

TEST(QuadOnQuad, RandomInstancesAreNeverMinimal) {
  std::mt19937 rng(11);
  int built = 0;
  int excluded = 0;
  while (built < 60) {
    Graph g = named_graph(NamedGraph::prism());
    for (int k = static_cast<int>(rng() % 3); k > 0; --k) {
      const auto specs = enumerate_specs(g, kAllVariants);
      g = apply(g, specs[rng() % specs.size()]).first;
    }
    std::vector<Quasiquadratic> firsts;
    for (const auto& s : enumerate_specs(g, variant_bit(ExtensionKind::Quasiquadratic))) {
      const auto q = std::get<Quasiquadratic>(s.op);
      if (!g.has_edge(q.u, q.v)) firsts.push_back(q);
    }
    if (firsts.empty()) continue;
    const auto first = firsts[rng() % firsts.size()];
    const Graph g1 = apply(g, ExtensionSpec{first, {}}).first;
    const auto nu = static_cast<VertexId>(g.num_vertices());
    std::vector<Quasiquadratic> seconds;
    for (const auto& s : enumerate_specs(g1, variant_bit(ExtensionKind::Quasiquadratic))) {
      const auto q = std::get<Quasiquadratic>(s.op);
      const bool uses_new = q.u >= nu || q.v >= nu || q.x >= nu || q.y >= nu;
      if (uses_new && !g1.has_edge(q.u, q.v)) seconds.push_back(q);
    }
    if (seconds.empty()) continue;
    const auto r = build_quadonquad(g, first, seconds[rng() % seconds.size()]);
    ++built;
    EXPECT_FALSE(r.minimal);
    EXPECT_TRUE(is_brick(without_edge(r.g_double_prime, r.witness.u, r.witness.v)));
    if (r.separation_excluded) {
      ++excluded;
      EXPECT_TRUE(r.minus_uu_bicritical);
      EXPECT_TRUE(r.minus_uu_three_connected);
    }
  }
  EXPECT_GT(excluded, 20);
}

TEST(SequenceFile, RoundTrip) {
  const auto recipe = ladder_plus_recipe(3);
  std::ostringstream out;
  write_sequence(out, recipe);
  std::istringstream in("# ladder\n\n" + out.str());
  const auto back = read_sequence(in);
  EXPECT_EQ(back.start, recipe.start);
  EXPECT_EQ(back.specs, recipe.specs);
  EXPECT_TRUE(out.str().starts_with("start PRISM\nQQUART u=0 v=1 x=2 y=5\nQQUAD u=0 v=1 x=5 y=8\n"));
}

TEST(SequenceFile, ParseErrors) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      (void)read_sequence(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("start CUBE\n"), 1u);
  EXPECT_EQ(line_of("# only a comment\n"), 2u);
  EXPECT_EQ(line_of("start K4\nQQUAD u=0 v=1 x=2 y=3\nQQUAD u=0 v=1\n"), 3u);
  EXPECT_EQ(line_of("\nstart K4\nFOO\n"), 3u);
}

}  // namespace
}  // namespace brickforge
