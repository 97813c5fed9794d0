#include "brickforge/generator.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "brickforge/brick_check.hpp"
#include "brickforge/error.hpp"
#include "brickforge/named_graphs.hpp"

namespace brickforge {
namespace {

unsigned resolve_jobs(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. The first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  jobs = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = count;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct Node {
  Graph graph;
  std::optional<SequenceRecipe> recipe;
  bool uses_identifications = false;
};

struct Child {
  CanonicalForm form;
  Graph graph;
  ExtensionSpec spec;
  bool identifications = false;
};

VariantMask room_mask(VariantMask requested, std::size_t n, int max_n) {
  const auto room = max_n - static_cast<int>(n);
  if (room >= 4) return requested;
  if (room >= 2) return requested & (variant_bit(ExtensionKind::StrictLinear1) | variant_bit(ExtensionKind::Quasiquadratic));
  return 0;
}

}  // namespace

int generate_cap() {
  if (const char* env = std::getenv("BRICKFORGE_CAP")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
    throw Error(ErrorKind::BadParameter, std::string("BRICKFORGE_CAP is not a positive integer: ") + env);
  }
  return kDefaultGenerateCap;
}

GenerateResult generate_bricks(const GenerateOptions& options) {
  const int max_n = options.max_n;
  if (max_n < 4 || max_n % 2 != 0) throw Error(ErrorKind::BadParameter, "max_n must be even and at least 4");
  if (max_n > generate_cap()) {
    throw Error(ErrorKind::CapExceeded,
                "max_n=" + std::to_string(max_n) + " exceeds the cap " + std::to_string(generate_cap()));
  }

  GenerateResult result;
  std::map<int, std::map<CanonicalForm, Node>> pending;
  for (StartGraph start : {StartGraph::K4, StartGraph::Prism}) {
    Graph g = start_graph(start);
    if (static_cast<int>(g.num_vertices()) > max_n) continue;
    pending[static_cast<int>(g.num_vertices())].emplace(canonical_form(g), Node{g, SequenceRecipe{start, {}}, false});
  }
  if (max_n >= 10) {
    Graph p = named_graph(NamedGraph::petersen());
    pending[10].emplace(canonical_form(p), Node{p, std::nullopt, false});
  }

  const EnumerateOptions enum_opts{.reduce_tuple_symmetry = true};
  for (int n = 4; n <= max_n; n += 2) {
    auto level_it = pending.find(n);
    if (level_it == pending.end()) continue;
    std::vector<std::pair<CanonicalForm, Node>> level(std::make_move_iterator(level_it->second.begin()),
                                                      std::make_move_iterator(level_it->second.end()));
    pending.erase(level_it);

    std::vector<char> minimal(level.size());
    parallel_for(level.size(), options.jobs, [&](std::size_t i) {
      const Graph& g = level[i].second.graph;
      minimal[i] = static_cast<bool>(is_minimal_brick(g));
      if (!minimal[i] && !is_brick(g)) {
        throw Error(ErrorKind::InternalCheckFailed, "generated a non-brick");
      }
    });

    std::vector<std::size_t> expand;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!options.minimal_only || minimal[i]) {
        const Node& node = level[i].second;
        result.bricks.push_back(
            {level[i].first, canonical_graph(node.graph), node.recipe, node.uses_identifications});
      }
      const bool root = level[i].second.recipe.has_value();
      if (root && (!options.minimal_only || !options.prune_nonminimal || minimal[i])) expand.push_back(i);
    }

    std::vector<std::vector<Child>> children(expand.size());
    std::atomic<std::size_t> applied{0};
    parallel_for(expand.size(), options.jobs, [&](std::size_t k) {
      const Graph& g = level[expand[k]].second.graph;
      const VariantMask mask = room_mask(options.variants, g.num_vertices(), max_n);
      std::set<CanonicalForm> local;
      std::size_t count = 0;
      for_each_spec(g, mask, enum_opts, [&](const ExtensionSpec& spec) {
        auto [h, rec] = apply(g, spec);
        ++count;
        CanonicalForm form = canonical_form(h);
        if (!local.insert(form).second) return;
        children[k].push_back({std::move(form), std::move(h), spec, !rec.identifications.empty()});
      });
      applied += count;
    });
    result.expanded += expand.size();
    result.specs_applied += applied;

    for (std::size_t k = 0; k < expand.size(); ++k) {
      const Node& parent = level[expand[k]].second;
      for (auto& child : children[k]) {
        auto& bucket = pending[static_cast<int>(child.graph.num_vertices())];
        if (bucket.count(child.form)) continue;
        SequenceRecipe recipe = *parent.recipe;
        recipe.specs.push_back(child.spec);
        bucket.emplace(std::move(child.form),
                       Node{std::move(child.graph), std::move(recipe), parent.uses_identifications || child.identifications});
      }
    }
  }

  std::sort(result.bricks.begin(), result.bricks.end(),
            [](const GeneratedBrick& a, const GeneratedBrick& b) { return a.form < b.form; });
  return result;
}

std::vector<CanonicalForm> exhaustive_minimal_bricks(int n, bool allow_long, const ProgressFn& progress) {
  if (n < 0) throw Error(ErrorKind::BadParameter, "negative order");
  if (n % 2 != 0 || n < 4) return {};
  if (n > 8 || (n == 8 && !allow_long)) {
    throw Error(ErrorKind::TooLarge, "exhaustive sweep supports n=4, 6 (and 8 when explicitly allowed)");
  }
  std::vector<Edge> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::size_t total_pairs = pairs.size();
  // remaining[d][v]: pairs at index >= d incident with v.
  std::vector<std::vector<int>> remaining(total_pairs + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
  for (std::size_t d = total_pairs; d-- > 0;) {
    remaining[d] = remaining[d + 1];
    ++remaining[d][static_cast<std::size_t>(pairs[d].u)];
    ++remaining[d][static_cast<std::size_t>(pairs[d].v)];
  }

  const std::uint64_t total = std::uint64_t{1} << total_pairs;
  std::uint64_t done = 0;
  std::uint64_t next_report = 0;
  std::set<CanonicalForm> found;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<Edge> chosen;

  std::function<void(std::size_t)> recurse = [&](std::size_t d) {
    for (VertexId v = 0; v < n; ++v) {
      if (degree[static_cast<std::size_t>(v)] + remaining[d][static_cast<std::size_t>(v)] < 3) {
        done += std::uint64_t{1} << (total_pairs - d);
        return;
      }
    }
    if (d == total_pairs) {
      ++done;
      Graph g(static_cast<std::size_t>(n), chosen);
      if (is_minimal_brick(g)) found.insert(canonical_form(g));
      if (progress && done >= next_report) {
        progress(done, total);
        next_report = done + total / 100;
      }
      return;
    }
    const Edge e = pairs[d];
    chosen.push_back(e);
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
    recurse(d + 1);
    --degree[static_cast<std::size_t>(e.u)];
    --degree[static_cast<std::size_t>(e.v)];
    chosen.pop_back();
    recurse(d + 1);
  };
  recurse(0);
  if (progress) progress(total, total);
  return {found.begin(), found.end()};
}

CorpusReport verify_corpus(std::span<const Graph> graphs, unsigned jobs) {
  struct Item {
    bool minimal = false;
    BoundsReport bounds;
  };
  std::vector<Item> items(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    items[i].minimal = static_cast<bool>(is_minimal_brick(graphs[i]));
    if (items[i].minimal) items[i].bounds = verify_paper_bounds(graphs[i], false);
  });

  CorpusReport report;
  report.graphs = graphs.size();
  auto keep_min = [](std::optional<Rational>& slot, Rational value) {
    if (!slot || value < *slot) slot = value;
  };
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].minimal) {
      ++report.skipped;
      continue;
    }
    ++report.minimal_bricks;
    const BoundsReport& b = items[i].bounds;
    const auto n = static_cast<std::int64_t>(b.stats.n);
    if (!b.deg_le4_ok) report.violations.push_back({i, "deg_le4"});
    if (!b.deg3_ok) report.violations.push_back({i, "deg3"});
    if (!b.avg_ok) report.violations.push_back({i, "avg"});
    if (!b.avg_exception.empty()) ++report.exceptions;
    keep_min(report.min_deg_le4_fraction, Rational(static_cast<std::int64_t>(b.stats.n_deg_le4), n));
    keep_min(report.min_deg3_fraction, Rational(static_cast<std::int64_t>(b.stats.n_deg3), n));
    const Rational ge5(n - static_cast<std::int64_t>(b.stats.n_deg_le4), n);
    if (!report.max_deg_ge5_fraction || ge5 > *report.max_deg_ge5_fraction) report.max_deg_ge5_fraction = ge5;
  }
  return report;
}

std::string format_corpus_report(const CorpusReport& r) {
  std::ostringstream out;
  auto frac = [](const std::optional<Rational>& x) {
    if (!x) return std::string("none");
    return std::to_string(x->numerator()) + "/" + std::to_string(x->denominator());
  };
  out << "graphs=" << r.graphs << '\n';
  out << "minimal_bricks=" << r.minimal_bricks << '\n';
  out << "skipped=" << r.skipped << '\n';
  out << "avg_exceptions=" << r.exceptions << '\n';
  out << "violations=" << r.violations.size() << '\n';
  for (const auto& v : r.violations) out << "violation index=" << v.index << " bound=" << v.bound << '\n';
  out << "min_deg_le4_fraction=" << frac(r.min_deg_le4_fraction) << '\n';
  out << "min_deg3_fraction=" << frac(r.min_deg3_fraction) << '\n';
  out << "max_deg_ge5_fraction=" << frac(r.max_deg_ge5_fraction) << '\n';
  return out.str();
}

}  // namespace brickforge
