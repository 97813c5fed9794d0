#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "brickforge/brick_check.hpp"
#include "brickforge/canonical.hpp"
#include "brickforge/error.hpp"
#include "brickforge/extensions.hpp"
#include "brickforge/generator.hpp"
#include "brickforge/matching.hpp"
#include "brickforge/named_graphs.hpp"
#include "brickforge/sequences.hpp"
#include "support.hpp"

using namespace brickforge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

/// Every extension applied anywhere in this run, for the property and delta criteria.
struct Ledger {
  std::size_t extensions = 0;
  std::size_t property_failures = 0;
  std::size_t delta_failures = 0;
  std::size_t sl1_ratio_three = 0;
  std::size_t sequences = 0;
  std::size_t identity_failures = 0;

  std::pair<Graph, ExtensionRecord> apply_logged(const Graph& g, const ExtensionSpec& spec) {
    auto [h, rec] = apply(g, spec);
    ++extensions;
    if (!degrees_preserved_outside_fundament(g, h, rec) || !fundament_size_ok(rec)) ++property_failures;
    if (!deltas_match_table(rec)) ++delta_failures;
    if (rec.kind == ExtensionKind::StrictLinear1 && static_cast<std::int64_t>(rec.fundament.size()) == 3 * rec.delta_n) {
      ++sl1_ratio_three;
    }
    return {std::move(h), std::move(rec)};
  }

  BrickSequence build_logged(StartGraph start, const std::vector<ExtensionSpec>& specs) {
    BrickSequence seq = build(start, specs);
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
      const auto& rec = seq.steps[i];
      ++extensions;
      if (!degrees_preserved_outside_fundament(seq.graphs[i], seq.graphs[i + 1], rec) || !fundament_size_ok(rec)) {
        ++property_failures;
      }
      if (!deltas_match_table(rec)) ++delta_failures;
    }
    ++sequences;
    const auto s = stats(seq);
    const bool identity = s.total_vertices() == static_cast<std::int64_t>(seq.last().num_vertices()) &&
                          s.total_edges() == static_cast<std::int64_t>(seq.last().num_edges());
    if (!identity || !s.density_relations_hold()) ++identity_failures;
    return seq;
  }
};

std::vector<Graph> brick_pool() {
  std::vector<Graph> pool = {named_graph(NamedGraph::k4()), named_graph(NamedGraph::prism()),
                             named_graph(NamedGraph::petersen())};
  GenerateOptions options;
  options.max_n = 10;
  for (const auto& b : generate_bricks(options).bricks) pool.push_back(b.graph);
  return pool;
}

Outcome strict_extensions_give_bricks(Ledger& ledger, const std::vector<Graph>& pool, std::mt19937_64& rng) {
  int bricks = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph& g = pool[rng() % pool.size()];
    const auto specs = enumerate_specs(g, kAllVariants);
    const auto [h, rec] = ledger.apply_logged(g, specs[rng() % specs.size()]);
    bricks += is_brick(h) ? 1 : 0;
  }
  return {bricks == 500, std::to_string(bricks) + "/500 extensions are bricks"};
}

Outcome sl1_ratio_three(Ledger& ledger, const std::vector<Graph>& pool) {
  for (const Graph& g : pool) {
    for (const auto& spec : enumerate_specs(g, variant_bit(ExtensionKind::StrictLinear1))) {
      (void)ledger.apply_logged(g, spec);
    }
  }
  return {ledger.sl1_ratio_three > 0, ""};
}

Outcome sequences_replay(Ledger& ledger, std::mt19937_64& rng) {
  GenerateOptions options;
  options.max_n = 10;
  for (const auto& b : generate_bricks(options).bricks) {
    if (b.recipe) (void)ledger.build_logged(b.recipe->start, b.recipe->specs);
  }
  for (int i = 0; i < 100; ++i) {
    const StartGraph start = i % 2 ? StartGraph::Prism : StartGraph::K4;
    std::vector<ExtensionSpec> specs;
    Graph g = start_graph(start);
    for (int k = 0; k < 4; ++k) {
      const auto options_here = enumerate_specs(g, kAllVariants);
      specs.push_back(options_here[rng() % options_here.size()]);
      g = apply(g, specs.back()).first;
    }
    (void)ledger.build_logged(start, specs);
  }
  return {true, ""};
}

Outcome triple_ladder(Ledger& ledger) {
  const auto recipe = triple_ladder_recipe(NamedGraph::kTripleLadderDefault);
  const auto seq = ledger.build_logged(recipe.start, recipe.specs);
  bool alternating = true;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto expected = i % 2 == 0 ? ExtensionKind::Quasiquartic : ExtensionKind::Quasiquadratic;
    alternating = alternating && seq.steps[i].kind == expected && is_brick(seq.graphs[i + 1]);
  }
  const Graph& g = seq.last();
  const auto d = degree_stats(g);
  const bool minimal = static_cast<bool>(is_minimal_brick(g));
  const bool exact = 3 * d.n_deg3 == 2 * d.n;
  return {alternating && minimal && exact && g == named_graph(NamedGraph::triple_ladder()),
          "n=" + std::to_string(d.n) + " deg3=" + std::to_string(d.n_deg3) + " minimal=" + (minimal ? "yes" : "no")};
}

Outcome ladder_plus(Ledger& ledger) {
  const auto recipe = ladder_plus_recipe(NamedGraph::kLadderPlusDefault);
  const auto seq = ledger.build_logged(recipe.start, recipe.specs);
  const Graph& g = seq.last();
  const auto d = degree_stats(g);
  const bool minimal = static_cast<bool>(is_minimal_brick(g));
  const Rational fraction(static_cast<std::int64_t>(d.count(6)), static_cast<std::int64_t>(d.n));
  const bool in_range = fraction >= Rational(1, 8) && fraction <= Rational(1, 6);
  return {minimal && in_range && g == named_graph(NamedGraph::ladder_plus()),
          "n=" + std::to_string(d.n) + " deg6=" + std::to_string(d.count(6)) +
              " minimal=" + (minimal ? "yes" : "no")};
}

Outcome corpus_bounds() {
  GenerateOptions options;
  options.max_n = 12;
  std::vector<Graph> graphs;
  for (auto& b : generate_bricks(options).bricks) graphs.push_back(std::move(b.graph));
  const auto report = verify_corpus(graphs);
  const bool pass = report.violations.empty() && report.minimal_bricks == graphs.size();
  return {pass, std::to_string(report.minimal_bricks) + " minimal bricks, " + std::to_string(report.violations.size()) +
                    " violations, " + std::to_string(report.exceptions) + " average-degree exceptions"};
}

Outcome matching_oracle(std::mt19937_64& rng) {
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  for (int n = 0; n <= 6; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      const Graph g = testing::from_mask(n, mask);
      ++checked;
      disagreements += has_perfect_matching(g) != brute_force_pm(g) ? 1 : 0;
    }
  }
  std::uniform_int_distribution<int> order(1, 12);
  std::uniform_real_distribution<double> density(0.05, 0.9);
  for (int i = 0; i < 10000; ++i) {
    const Graph g = testing::random_graph(rng, order(rng), density(rng));
    ++checked;
    disagreements += has_perfect_matching(g) != brute_force_pm(g) ? 1 : 0;
  }
  return {disagreements == 0, std::to_string(checked) + " graphs, " + std::to_string(disagreements) + " disagreements"};
}

Outcome enumeration_oracle() {
  GenerateOptions options;
  options.max_n = 6;
  std::set<CanonicalForm> generated;
  for (const auto& b : generate_bricks(options).bricks) generated.insert(b.form);
  std::set<CanonicalForm> exhaustive;
  for (int n : {4, 6}) {
    for (const auto& f : exhaustive_minimal_bricks(n)) exhaustive.insert(f);
  }
  const auto prism = canonical_form(named_graph(NamedGraph::prism()));
  const bool pass = generated == exhaustive && generated.contains(prism) && exhaustive.contains(prism);
  return {pass, std::to_string(generated.size()) + " generated, " + std::to_string(exhaustive.size()) + " exhaustive"};
}

Graph random_brick(const std::vector<Graph>& pool, std::mt19937_64& rng, Ledger& ledger) {
  Graph g = pool[rng() % pool.size()];
  for (int k = static_cast<int>(rng() % 2); k > 0; --k) {
    const auto specs = enumerate_specs(g, kAllVariants);
    g = ledger.apply_logged(g, specs[rng() % specs.size()]).first;
  }
  return g;
}

std::vector<ExtensionSpec> conservative_quadratics(const Graph& g) {
  std::vector<ExtensionSpec> out;
  for (const auto& s : enumerate_specs(g, variant_bit(ExtensionKind::Quasiquadratic))) {
    const auto& q = std::get<Quasiquadratic>(s.op);
    if (!g.has_edge(q.u, q.v)) out.push_back(s);
  }
  return out;
}

Outcome reorder_triples(Ledger& ledger, const std::vector<Graph>& pool, std::mt19937_64& rng) {
  int ok = 0;
  int built = 0;
  while (built < 100) {
    const Graph a = random_brick(pool, rng, ledger);
    const auto firsts = conservative_quadratics(a);
    if (firsts.empty()) continue;
    const auto [b, rec_b] = ledger.apply_logged(a, firsts[rng() % firsts.size()]);
    const VertexId p = rec_b.new_vertices[0];
    const VertexId q = rec_b.new_vertices[1];
    const auto seconds = enumerate_specs(b, kAllVariants);
    const auto [c, rec_c] = ledger.apply_logged(b, seconds[rng() % seconds.size()]);
    const bool conflict = std::ranges::any_of(rec_c.fundament, [&](VertexId f) { return f == p || f == q; });
    if (conflict) continue;
    ++built;
    try {
      const auto r = reorder(a, rec_b, rec_c);
      const auto nc = static_cast<VertexId>(c.num_vertices());
      const bool pass = is_brick(r.b_prime) && r.b_prime_to_c.kind == ExtensionKind::Quasiquadratic &&
                        r.b_prime_to_c.conservative && r.a_to_b_prime.kind == rec_c.kind &&
                        r.c_relabel[static_cast<std::size_t>(p)] == nc - 2 &&
                        r.c_relabel[static_cast<std::size_t>(q)] == nc - 1 &&
                        r.b_prime_to_c.new_vertices == std::vector<VertexId>{nc - 2, nc - 1} &&
                        apply(r.b_prime, r.b_prime_to_c.spec).first == relabel(c, r.c_relabel);
      ok += pass ? 1 : 0;
    } catch (const Error& e) {
      std::printf("  reorder failed: %s\n", e.what());
    }
  }
  return {ok == 100, std::to_string(ok) + "/100 triples reordered"};
}

Outcome quadonquad_instances(const std::vector<Graph>& pool, std::mt19937_64& rng, Ledger& ledger) {
  int verified = 0;
  int built = 0;
  int outside_premises = 0;
  while (built < 50) {
    const Graph g = random_brick(pool, rng, ledger);
    const auto firsts = conservative_quadratics(g);
    if (firsts.empty()) continue;
    const auto first = std::get<Quasiquadratic>(firsts[rng() % firsts.size()].op);
    const Graph g1 = apply(g, ExtensionSpec{first, {}}).first;
    const auto old_n = static_cast<VertexId>(g.num_vertices());
    std::vector<Quasiquadratic> seconds;
    for (const auto& s : conservative_quadratics(g1)) {
      const auto& q = std::get<Quasiquadratic>(s.op);
      if (q.u >= old_n || q.v >= old_n || q.x >= old_n || q.y >= old_n) seconds.push_back(q);
    }
    if (seconds.empty()) continue;
    try {
      const auto r = build_quadonquad(g, first, seconds[rng() % seconds.size()]);
      if (!r.separation_excluded) {
        ++outside_premises;
        continue;
      }
      ++built;
      const Graph minus = without_edge(r.g_double_prime, r.u, r.u_prime);
      const bool pass = !is_minimal_brick(r.g_double_prime) && is_bicritical(minus) && is_three_connected(minus);
      verified += pass ? 1 : 0;
    } catch (const Error& e) {
      ++built;
      std::printf("  quadonquad failed: %s\n", e.what());
    }
  }
  return {verified == 50, std::to_string(verified) + "/50 instances verify both claims on G''-uu' (" +
                              std::to_string(outside_premises) + " drawn instances had v' or x in {s,t})"};
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);
  Ledger ledger;
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& run) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::printf("criterion %2d %s  %s%s%s (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.empty() ? "" : ": ",
                o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  const auto pool = brick_pool();
  report(1, "strict extensions of bricks are bricks", [&] { return strict_extensions_give_bricks(ledger, pool, rng); });
  report(4, "triple ladder", [&] { return triple_ladder(ledger); });
  report(5, "ladder plus", [&] { return ladder_plus(ledger); });
  report(6, "degree bounds on generated minimal bricks up to n=12", [&] { return corpus_bounds(); });
  report(7, "perfect matching oracle", [&] { return matching_oracle(rng); });
  report(8, "generator against exhaustive oracle at n<=6", [&] { return enumeration_oracle(); });
  report(9, "reorder", [&] { return reorder_triples(ledger, pool, rng); });
  report(10, "quadonquad", [&] { return quadonquad_instances(pool, rng, ledger); });
  (void)sequences_replay(ledger, rng);
  report(2, "fundament properties", [&] {
    (void)sl1_ratio_three(ledger, pool);
    return Outcome{ledger.property_failures == 0 && ledger.sl1_ratio_three > 0,
                   std::to_string(ledger.extensions) + " extensions, " + std::to_string(ledger.property_failures) +
                       " failures, " + std::to_string(ledger.sl1_ratio_three) + " SL1 with |F| = 3 dn"};
  });
  report(3, "delta table and vertex/edge identity", [&] {
    return Outcome{ledger.delta_failures == 0 && ledger.identity_failures == 0,
                   std::to_string(ledger.extensions) + " extensions, " + std::to_string(ledger.sequences) +
                       " sequences, " + std::to_string(ledger.delta_failures + ledger.identity_failures) + " failures"};
  });
  std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria fail");
  return failures == 0 ? 0 : 1;
}
