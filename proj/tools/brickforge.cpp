#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brickforge/brick_check.hpp"
#include "brickforge/error.hpp"
#include "brickforge/generator.hpp"
#include "brickforge/graph_io.hpp"
#include "brickforge/named_graphs.hpp"
#include "brickforge/sequences.hpp"

namespace fs = std::filesystem;
using namespace brickforge;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadParameter, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadParameter, "cannot write '" + path + "'");
  out << text;
}

std::string graph_text(const Graph& g, GraphFormat format) {
  std::string text = write_graph(g, format);
  if (text.empty() || text.back() != '\n') text += '\n';
  return text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<VertexId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
  return out;
}

std::string fraction(std::size_t num, std::size_t den) {
  const Rational r(static_cast<std::int64_t>(num), static_cast<std::int64_t>(std::max<std::size_t>(den, 1)));
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_record(const ExtensionRecord& rec) {
  std::ostringstream out;
  out << "spec=" << serialize_spec(rec.spec) << '\n';
  out << "kind=" << tag_of(rec.kind) << '\n';
  out << "fundament=" << join(rec.fundament) << '\n';
  out << "new_vertices=" << join(rec.new_vertices) << '\n';
  out << "delta_n=" << rec.delta_n << '\n';
  out << "delta_m=" << rec.delta_m << '\n';
  out << "conservative=" << yes_no(rec.conservative) << '\n';
  if (!rec.identifications.empty()) {
    out << "identifications=";
    for (std::size_t i = 0; i < rec.identifications.size(); ++i) out << (i ? "," : "") << rec.identifications[i];
    out << '\n';
  }
  return out.str();
}

struct Common {
  std::string format = "edgelist";
  GraphFormat graph_format() const { return parse_graph_format(format); }
};

void add_format(CLI::App* app, Common& common) {
  app->add_option("--format", common.format, "Graph file format")
      ->check(CLI::IsMember({"edgelist", "graph6"}))
      ->capture_default_str();
}

int run_check(const std::string& path, const Common& common, bool require_minimal) {
  const Graph g = read_graph(read_text(path), common.graph_format());
  const auto brick = is_brick(g);
  if (!brick) {
    std::cout << "brick: no (" << describe(brick.witness) << ")\n";
    return kFail;
  }
  const auto minimal = is_minimal_brick(g);
  std::cout << "brick: yes, minimal: " << (minimal ? "yes" : "no (" + describe(minimal.witness) + ")") << '\n';
  return require_minimal && !minimal ? kFail : kPass;
}

int run_extend(const std::string& path, const Common& common, const std::string& spec_text, const std::string& out) {
  const Graph g = read_graph(read_text(path), common.graph_format());
  const auto [h, rec] = apply(g, parse_spec(spec_text));
  const auto brick = is_brick(h);
  write_text(out, graph_text(h, common.graph_format()));
  std::ostream& log = out.empty() || out == "-" ? std::cerr : std::cout;
  log << format_record(rec);
  log << "n=" << h.num_vertices() << "\nm=" << h.num_edges() << '\n';
  log << "brick: " << (brick ? "yes" : "no (" + describe(brick.witness) + ")") << '\n';
  return brick ? kPass : kFail;
}

int run_generate(int max_n, bool minimal, bool no_prune, const std::string& variants, unsigned jobs,
                 const std::string& out, const std::string& recipe_dir) {
  GenerateOptions options;
  options.max_n = max_n;
  options.minimal_only = minimal;
  options.prune_nonminimal = !no_prune;
  options.variants = parse_variants(variants);
  options.jobs = jobs;
  const auto result = generate_bricks(options);

  std::string lines;
  std::map<std::size_t, std::size_t> by_order;
  std::size_t disputed = 0;
  for (const auto& b : result.bricks) {
    lines += write_graph6(b.graph) + '\n';
    ++by_order[b.graph.num_vertices()];
    disputed += b.uses_identifications ? 1 : 0;
  }
  write_text(out, lines);
  if (!recipe_dir.empty()) {
    fs::create_directories(recipe_dir);
    std::size_t index = 0;
    for (const auto& b : result.bricks) {
      ++index;
      if (!b.recipe) continue;
      std::ofstream seq(fs::path(recipe_dir) / ("brick" + std::to_string(index) + ".seq"));
      seq << "# " << write_graph6(b.graph) << '\n';
      write_sequence(seq, *b.recipe);
    }
  }
  std::cerr << "bricks=" << result.bricks.size() << '\n';
  for (const auto& [n, count] : by_order) std::cerr << "order " << n << ": " << count << '\n';
  std::cerr << "with_identifications=" << disputed << '\n';
  std::cerr << "expanded=" << result.expanded << "\nspecs_applied=" << result.specs_applied << '\n';
  return kPass;
}

std::vector<Graph> read_corpus_file(const fs::path& path, GraphFormat fallback) {
  const std::string text = read_text(path.string());
  const auto ext = path.extension().string();
  if (ext == ".g6" || ext == ".graph6") return read_graph6_lines(text);
  if (ext == ".el" || ext == ".edgelist") return {read_edge_list(text)};
  if (fallback == GraphFormat::Graph6) return read_graph6_lines(text);
  return {read_edge_list(text)};
}

int run_verify(const std::string& dir, const std::vector<std::string>& files, const Common& common, unsigned jobs) {
  std::vector<fs::path> paths(files.begin(), files.end());
  if (!dir.empty()) {
    if (!fs::is_directory(dir)) throw Error(ErrorKind::BadParameter, "not a directory: '" + dir + "'");
    std::vector<fs::path> found;
    for (const auto& entry : fs::directory_iterator(dir)) {
      const auto ext = entry.path().extension().string();
      if (entry.is_regular_file() && (ext == ".g6" || ext == ".graph6" || ext == ".el" || ext == ".edgelist")) {
        found.push_back(entry.path());
      }
    }
    std::sort(found.begin(), found.end());
    paths.insert(paths.end(), found.begin(), found.end());
  }
  if (paths.empty()) throw Error(ErrorKind::BadParameter, "no graph files given");
  std::vector<Graph> graphs;
  for (const auto& p : paths) {
    auto part = read_corpus_file(p, common.graph_format());
    std::move(part.begin(), part.end(), std::back_inserter(graphs));
  }
  const auto report = verify_corpus(graphs, jobs);
  std::cout << "files=" << paths.size() << '\n' << format_corpus_report(report);
  return report.violations.empty() ? kPass : kFail;
}

int run_stats(const std::string& path, const Common& common) {
  const Graph g = read_graph(read_text(path), common.graph_format());
  const auto d = degree_stats(g);
  std::cout << "n=" << d.n << "\nm=" << d.m << '\n';
  std::cout << "avg_degree=" << fraction(2 * d.m, d.n) << '\n';
  for (std::size_t deg = 0; deg < d.histogram.size(); ++deg) {
    if (d.histogram[deg]) std::cout << "deg" << deg << "=" << d.histogram[deg] << '\n';
  }
  std::cout << "deg3_fraction=" << fraction(d.n_deg3, d.n) << '\n';
  std::cout << "deg_le4_fraction=" << fraction(d.n_deg_le4, d.n) << '\n';
  if (!is_minimal_brick(g)) {
    std::cout << "minimal_brick=no\n";
    return kPass;
  }
  const auto bounds = verify_paper_bounds(g, false);
  std::cout << "minimal_brick=yes\n";
  std::cout << "bound_deg_le4=" << (bounds.deg_le4_ok ? "ok" : "violated") << '\n';
  std::cout << "bound_deg3=" << (bounds.deg3_ok ? "ok" : "violated") << '\n';
  std::cout << "bound_avg=" << (bounds.avg_ok ? "ok" : "violated");
  if (!bounds.avg_exception.empty()) std::cout << " (exception " << bounds.avg_exception << ")";
  std::cout << '\n';
  return bounds.all_ok() ? kPass : kFail;
}

int run_sequence(const std::string& path, const Common& common, const std::string& out) {
  std::istringstream in(read_text(path));
  const auto recipe = read_sequence(in);
  const auto seq = build(recipe.start, recipe.specs);
  const auto s = stats(seq);
  std::cout << "start=" << to_string(seq.start) << "\nsteps=" << seq.steps.size() << '\n';
  std::cout << format_stats(s, seq.last());
  std::cout << "bricks=all\n";
  const auto minimal = is_minimal_brick(seq.last());
  std::cout << "minimal: " << (minimal ? "yes" : "no (" + describe(minimal.witness) + ")") << '\n';
  const auto d = degree_stats(seq.last());
  std::cout << "deg3_fraction=" << fraction(d.n_deg3, d.n) << '\n';
  if (minimal) {
    const auto high = high_average_degree_report(seq.last());
    const Rational delta = high.delta;
    if (delta > 0) {
      const auto lots = check_lotsofquad(seq, delta);
      std::cout << "lotsofquad=" << (lots.holds ? "holds" : "fails") << '\n';
    } else {
      std::cout << "lotsofquad=precondition_unmet\n";
    }
  }
  if (!out.empty()) write_text(out, graph_text(seq.last(), common.graph_format()));
  return kPass;
}

int run_named(const std::string& name, const Common& common, const std::string& out) {
  write_text(out, graph_text(named_graph(parse_named_graph(name)), common.graph_format()));
  return kPass;
}

int run_sweep(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Graph roots[] = {named_graph(NamedGraph::k4()), named_graph(NamedGraph::prism()),
                         named_graph(NamedGraph::petersen())};
  int failures = 0;
  int checked = 0;
  for (int i = 0; i < count; ++i) {
    Graph g = roots[rng() % std::size(roots)];
    for (int depth = static_cast<int>(rng() % 3); depth >= 0; --depth) {
      const auto specs = enumerate_specs(g, kAllVariants);
      const auto& spec = specs[rng() % specs.size()];
      auto [h, rec] = apply(g, spec);
      ++checked;
      if (!is_brick(h)) {
        ++failures;
        std::cout << "not a brick: " << write_graph6(g) << " " << serialize_spec(spec) << '\n';
      }
      g = std::move(h);
    }
  }
  std::cout << "seed=" << seed << "\nextensions_checked=" << checked << "\nfailures=" << failures << '\n';
  return failures == 0 ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bricks, minimal bricks and strict extensions"};
  app.require_subcommand(1);
  Common common;
  std::string path;
  std::string out;
  unsigned jobs = 0;

  auto* check = app.add_subcommand("check", "Brick and minimal-brick verdict with witness");
  bool require_minimal = false;
  check->add_option("path", path, "Graph file ('-' for stdin)")->required();
  check->add_flag("--minimal", require_minimal, "Fail unless the graph is a minimal brick");
  add_format(check, common);

  auto* extend = app.add_subcommand("extend", "Apply one strict extension");
  std::string spec_text;
  extend->add_option("path", path, "Graph file ('-' for stdin)")->required();
  extend->add_option("--spec", spec_text, "Serialized extension spec")->required();
  extend->add_option("--out", out, "Write the extended graph here instead of stdout");
  add_format(extend, common);

  auto* generate = app.add_subcommand("generate", "Enumerate bricks up to --max-n vertices as graph6 lines");
  int max_n = 8;
  bool minimal = false;
  bool no_prune = false;
  std::string variants = "all";
  std::string recipe_dir;
  generate->add_option("--max-n", max_n, "Largest order")->capture_default_str();
  generate->add_flag("--minimal", minimal, "Emit minimal bricks only");
  generate->add_flag("--no-prune", no_prune, "Keep non-minimal intermediates in the frontier");
  generate->add_option("--variants", variants, "'all' or tags such as QQUAD,QQUART")->capture_default_str();
  generate->add_option("--jobs", jobs, "Worker threads (0: all cores)");
  generate->add_option("--out", out, "Write graph6 lines here instead of stdout");
  generate->add_option("--recipes", recipe_dir, "Directory receiving one sequence file per brick");

  auto* verify = app.add_subcommand("verify", "Degree bounds over a corpus of minimal bricks");
  std::string dir;
  std::vector<std::string> files;
  verify->add_option("--dir", dir, "Directory of .g6/.el files");
  verify->add_option("files", files, "Graph files");
  verify->add_option("--jobs", jobs, "Worker threads (0: all cores)");
  add_format(verify, common);

  auto* stats_cmd = app.add_subcommand("stats", "Degree statistics and bounds");
  stats_cmd->add_option("path", path, "Graph file ('-' for stdin)")->required();
  add_format(stats_cmd, common);

  auto* sequence = app.add_subcommand("sequence", "Build a brick-on-brick sequence file and report its accounting");
  sequence->add_option("path", path, "Sequence file")->required();
  sequence->add_option("--out", out, "Write the final graph here");
  add_format(sequence, common);

  auto* named = app.add_subcommand("named", "Print a named graph, e.g. Wheel(6) or TripleLadder(3)");
  std::string name;
  named->add_option("name", name)->required();
  named->add_option("--out", out, "Write the graph here instead of stdout");
  add_format(named, common);

  auto* sweep = app.add_subcommand("sweep", "Random strict extensions of bricks, each brick-checked");
  int count = 200;
  std::uint64_t seed = 1;
  sweep->add_option("--count", count)->capture_default_str();
  sweep->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*check) return run_check(path, common, require_minimal);
    if (*extend) return run_extend(path, common, spec_text, out);
    if (*generate) return run_generate(max_n, minimal, no_prune, variants, jobs, out, recipe_dir);
    if (*verify) return run_verify(dir, files, common, jobs);
    if (*stats_cmd) return run_stats(path, common);
    if (*sequence) return run_sequence(path, common, out);
    if (*named) return run_named(name, common, out);
    if (*sweep) return run_sweep(count, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
