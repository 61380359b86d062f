// legnet: build, filter and analyse legislation networks from the command line.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "legnet/bowtie.hpp"
#include "legnet/corpus_io.hpp"
#include "legnet/error.hpp"
#include "legnet/filters.hpp"
#include "legnet/generator.hpp"
#include "legnet/metrics.hpp"
#include "legnet/parallel.hpp"
#include "legnet/powerlaw.hpp"
#include "legnet/random.hpp"
#include "legnet/random_models.hpp"
#include "legnet/report.hpp"
#include "legnet/resilience.hpp"
#include "legnet/temporal.hpp"

namespace {

using namespace legnet;
using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitCompute = 4;

struct Common {
  std::string input = "-";
  std::string edges_file;
  std::string format = "jsonl";
  bool lenient = false;
  std::string out_dir;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string current;
  std::string network = "LN";
  bool csv = false;
};

struct SideFile {
  std::string name;
  std::string contents;
};

struct Loaded {
  LegislationGraph graph;
  IngestReport report;
  std::string digest;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") return read_all(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cli-reports", "cannot read input '" + path + "'");
  return read_all(in);
}

Loaded load(const Common& c) {
  Loaded out;
  const IngestMode mode = c.lenient ? IngestMode::lenient : IngestMode::strict;
  const std::string documents = read_source(c.input);
  IngestResult result;
  if (c.format == "csv") {
    if (c.edges_file.empty()) throw ConfigError("cli-reports", "--format csv needs --edges");
    const std::string edges = read_source(c.edges_file);
    std::istringstream d(documents), e(edges);
    result = ingest_csv(d, e, mode);
    out.digest = "sha256:" + sha256_hex(documents + '\0' + edges);
  } else {
    std::istringstream d(documents);
    result = ingest_jsonl(d, mode);
    out.digest = "sha256:" + sha256_hex(documents);
  }
  out.graph = std::move(result.graph);
  out.report = std::move(result.report);
  return out;
}

Network parse_network(const std::string& name) {
  const auto network = network_from_name(name);
  if (!network) throw ConfigError("cli-reports", "unknown network '" + name + "' (LN, RN, ICN, LBN)");
  return *network;
}

std::optional<Date> parse_current(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto date = Date::parse(text);
  if (!date) throw ConfigError("cli-reports", "--current expects YYYY-MM-DD, got '" + text + "'");
  return date;
}

/// Applies --current, then the network preset.
LegislationGraph prepare(const Common& c, const LegislationGraph& g) {
  const Network network = parse_network(c.network);
  if (const auto at = parse_current(c.current)) return select_network(snapshot(g, *at), network);
  return select_network(g, network);
}

fs::path output_dir(const Common& c) {
  if (!c.out_dir.empty()) return c.out_dir;
  if (const char* env = std::getenv("LEGNET_OUT_DIR"); env && *env) return env;
  return ".";
}

json common_config(const Common& c) {
  json config = {{"input", c.input}, {"format", c.format}, {"ingest_mode", c.lenient ? "lenient" : "strict"},
                 {"network", network_name(parse_network(c.network))}};
  config["current"] = c.current.empty() ? json(nullptr) : json(c.current);
  if (c.format == "csv") config["edges"] = c.edges_file;
  return config;
}

void emit(const Common& c, RunManifest manifest, json body, const std::vector<SideFile>& side) {
  manifest.finished = utc_timestamp();
  const fs::path dir = output_dir(c);
  std::string stem = manifest.command;
  for (char& ch : stem)
    if (ch == '-') ch = '_';
  write_file(dir / (stem + ".json"), dump(make_document(manifest, std::move(body))));
  for (const SideFile& f : side) write_file(dir / f.name, f.contents);
}

RunManifest start(const std::string& command, const Common& c) {
  RunManifest m;
  m.command = command;
  m.seed = c.seed;
  m.started = utc_timestamp();
  return m;
}

std::pair<int, int> year_range(const LegislationGraph& g) {
  int first = 0, last = 0;
  bool any = false;
  for (const LegalDocument& d : g.documents()) {
    if (d.stub) continue;
    const int y = d.effect.year();
    if (!any || y < first) first = y;
    if (!any || y > last) last = y;
    any = true;
  }
  if (!any) throw ComputeError("temporal-analysis", "no dated documents to derive a year range from");
  return {first, last};
}

/// Runs a section that may be undefined for degenerate inputs.
json attempt(const std::function<json()>& section) {
  try {
    return section();
  } catch (const ComputeError& e) {
    return {{"error", e.what()}};
  }
}

void write_corpus(const LegislationGraph& g, const std::string& output, const std::string& format) {
  if (format == "csv") {
    if (output.empty() || output == "-") throw ConfigError("cli-reports", "--format csv needs --output PREFIX");
    std::ostringstream docs, edges;
    write_csv(g, docs, edges);
    write_file(output + ".docs.csv", docs.str());
    write_file(output + ".edges.csv", edges.str());
    return;
  }
  std::ostringstream out;
  write_jsonl(g, out);
  if (output.empty() || output == "-") {
    std::cout << out.str();
    std::cout.flush();
  } else {
    write_file(output, out.str());
  }
}

// ---------------------------------------------------------------------------
// Report sections shared by the single commands and report-all.

json basic_properties(const LegislationGraph& g, std::size_t path_sources, std::uint64_t seed) {
  const ComponentReport comps = components(g);
  json row = {{"nodes", g.node_count()},
              {"edges", g.edge_count()},
              {"average_degree", number(g.node_count() ? 2.0 * static_cast<double>(g.edge_count()) /
                                                             static_cast<double>(g.node_count())
                                                       : 0.0)},
              {"gc_size", comps.giant_component.size()},
              {"gc_fraction", number(comps.gc_fraction)},
              {"isolated_nodes", comps.isolated_count}};
  if (comps.giant_component.size() >= 2) {
    PathOptions options;
    options.sample_sources = path_sources;
    options.seed = seed;
    const PathMetrics p = path_metrics(g, comps.giant_component, options);
    row["diameter"] = p.diameter;
    row["average_path_length"] = number(p.average_path_length);
    row["paths_sampled"] = p.sampled;
  } else {
    row["diameter"] = nullptr;
    row["average_path_length"] = nullptr;
    row["paths_sampled"] = false;
  }
  return row;
}

std::vector<std::uint64_t> as_u64(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

json assortativity_section(const LegislationGraph& g) {
  return {{"degree", attempt([&] { return number(assortativity(g, AssortativityCriterion::degree)); })},
          {"sector", attempt([&] { return number(assortativity(g, AssortativityCriterion::sector)); })}};
}

json bowtie_ids(const LegislationGraph& g, const BowTieDecomposition& b, std::vector<SideFile>& side,
                const std::string& prefix) {
  json files = json::array();
  for (BowTieRegion r : kAllRegions) {
    std::string text;
    for (NodeIndex v : b.of(r)) text += g.document(v).id.str() + "\n";
    const std::string name = prefix + std::string(region_name(r)) + ".txt";
    side.push_back({name, std::move(text)});
    files.push_back(name);
  }
  return files;
}

json temporal_section(const LegislationGraph& g, int first, int last, std::vector<SideFile>& side,
                      const std::string& prefix) {
  json out = json::object();
  for (Network network : kAllNetworks) {
    const LegislationGraph sub = select_network(g, network);
    const std::vector<SnapshotStat> series = evolution_series(sub, first, last);
    json stats = json::array();
    for (const SnapshotStat& s : series) stats.push_back(to_json(s));
    const std::string name = network_name(network);
    side.push_back({prefix + name + ".csv", snapshot_csv(series).str()});
    out[name] = {{"densification", attempt([&] { return to_json(densification_fit(series)); })},
                 {"series", stats}};
  }
  return out;
}

json resilience_section(const LegislationGraph& g, ResilienceConfig config, bool random, bool targeted, bool null,
                        std::vector<SideFile>& side, const std::string& csv_name) {
  json out = json::object();
  std::vector<ResilienceCurve> curves;
  std::vector<std::string> labels;
  curves.reserve(4);
  const auto run = [&](AttackStrategy strategy, const char* name) {
    config.strategy = strategy;
    if (null) {
      auto [graph_curve, null_curve] = compare_with_null(g, config);
      out[name] = {{"graph", to_json(graph_curve)}, {"er_null", to_json(null_curve)}};
      curves.push_back(std::move(graph_curve));
      labels.push_back(name);
      curves.push_back(std::move(null_curve));
      labels.push_back(std::string(name) + "_er_null");
    } else {
      ResilienceCurve curve = simulate(g, config);
      out[name] = {{"graph", to_json(curve)}};
      curves.push_back(std::move(curve));
      labels.push_back(name);
    }
  };
  if (random) run(AttackStrategy::random, "random");
  if (targeted) run(AttackStrategy::targeted, "targeted");
  std::vector<std::pair<std::string, const ResilienceCurve*>> rows;
  for (std::size_t i = 0; i < curves.size(); ++i) rows.emplace_back(labels[i], &curves[i]);
  side.push_back({csv_name, resilience_csv(rows).str()});
  config.strategy = AttackStrategy::random;
  out["config"] = to_json(config);
  out["config"].erase("strategy");
  out["config"]["repetitions_random"] = config.effective_repetitions();
  out["config"].erase("repetitions");
  return out;
}

// ---------------------------------------------------------------------------

struct Options {
  Common common;
  std::string output = "-";
  // generate
  GeneratorConfig generator;
  std::string output_format = "jsonl";
  // filter
  int sector = 0;
  std::string reftype;
  std::string at;
  std::string filter_network;
  // metrics
  std::size_t path_sources = 0;
  bool directed_paths = false;
  // bowtie
  bool dump_ids = false;
  int first_year = 0;
  int last_year = 0;
  // powerlaw
  std::string direction = "in";
  std::size_t bootstrap = kDefaultBootstrapReplicas;
  bool exact_mle = false;
  std::size_t min_tail = 25;
  // smallworld
  SmallWorldOptions small_world;
  // resilience
  std::string strategy = "both";
  double step = 0.05;
  std::size_t reps = 0;
  std::string degree_mode = "static";
  double stop_at = 0.99;
  bool null = false;
};

void add_common(CLI::App* app, Common& c, bool with_input = true, bool with_network = true) {
  if (with_input) {
    app->add_option("input", c.input, "Corpus file (JSONL, or documents CSV with --format csv); - for stdin");
    app->add_option("--format", c.format, "Input format")->check(CLI::IsMember({"jsonl", "csv"}));
    app->add_option("--edges", c.edges_file, "Edge CSV file for --format csv");
    app->add_flag("--lenient", c.lenient, "Create stub nodes for dangling references instead of failing");
  }
  app->add_option("--out-dir", c.out_dir, "Report directory (default $LEGNET_OUT_DIR or .)");
  app->add_option("--seed", c.seed, "Master seed");
  app->add_option("--threads", c.threads, "Worker thread cap (0 = all cores)");
  if (with_network) {
    app->add_option("--network", c.network, "Sub-network preset: LN, RN, ICN, LBN");
    app->add_option("--current", c.current, "Analyse the documents in force on this date (YYYY-MM-DD)");
  }
}

std::pair<int, int> resolve_years(const Options& o, const LegislationGraph& g) {
  if (o.first_year && o.last_year) return {o.first_year, o.last_year};
  auto [first, last] = year_range(g);
  if (o.first_year) first = o.first_year;
  if (o.last_year) last = o.last_year;
  return {first, last};
}

int run_ingest(const Options& o) {
  RunManifest m = start("ingest", o.common);
  const Loaded in = load(o.common);
  m.input_digest = in.digest;
  m.config = common_config(o.common);
  m.config.erase("network");
  m.config.erase("current");
  m.config["output"] = o.output;
  if (o.output != "-") write_corpus(in.graph, o.output, "jsonl");
  json body = to_json(in.report);
  body["stub_ids"] = in.report.stub_ids;
  emit(o.common, m, body, {});
  return 0;
}

int run_generate(const Options& o) {
  RunManifest m = start("generate", o.common);
  GeneratorConfig config = o.generator;
  config.seed = o.common.seed;
  config.validate();
  const LegislationGraph g = generate(config);
  std::ostringstream corpus;
  write_jsonl(g, corpus);
  m.input_digest = "sha256:" + sha256_hex(corpus.str());
  m.config = {{"generator", to_json(config)}, {"output", o.output}, {"output_format", o.output_format}};
  if (o.output_format == "csv") {
    write_corpus(g, o.output, "csv");
  } else if (o.output == "-") {
    std::cout << corpus.str();
    std::cout.flush();
  } else {
    write_file(o.output, corpus.str());
  }
  const SnapshotStat stat = snapshot_stat(g);
  json body = {{"nodes", g.node_count()}, {"edges", g.edge_count()}, {"schedule", config.docs_schedule()}};
  body["final"] = to_json(stat);
  body["final"].erase("year");
  emit(o.common, m, body, {});
  return 0;
}

int run_filter(const Options& o) {
  RunManifest m = start("filter", o.common);
  const Loaded in = load(o.common);
  m.input_digest = in.digest;
  m.config = common_config(o.common);
  m.config.erase("network");
  m.config.erase("current");
  LegislationGraph g = in.graph.subgraph(std::vector<bool>(in.graph.node_count(), true), [](const Edge&) { return true; });
  json steps = json::array();
  if (!o.at.empty()) {
    const auto at = Date::parse(o.at);
    if (!at) throw ConfigError("subgraph-filters", "--at expects YYYY-MM-DD, got '" + o.at + "'");
    g = snapshot(g, *at);
    steps.push_back({{"snapshot", at->to_string()}});
  }
  if (!o.filter_network.empty()) {
    const Network network = parse_network(o.filter_network);
    g = select_network(g, network);
    steps.push_back({{"network", network_name(network)}});
  }
  if (o.sector) {
    g = filter_sector(g, *sector_from_code(o.sector));
    steps.push_back({{"sector", o.sector}});
  }
  if (!o.reftype.empty()) {
    const auto kind = reftype_from_token(o.reftype);
    if (!kind) throw ConfigError("subgraph-filters", "unknown reference type '" + o.reftype + "'");
    g = filter_reftype(g, *kind);
    steps.push_back({{"reftype", o.reftype}});
  }
  m.config["steps"] = steps;
  m.config["output"] = o.output;
  m.config["output_format"] = o.output_format;
  write_corpus(g, o.output, o.output_format);
  emit(o.common, m, {{"input_nodes", in.graph.node_count()}, {"input_edges", in.graph.edge_count()},
                     {"nodes", g.node_count()}, {"edges", g.edge_count()}}, {});
  return 0;
}

int run_metrics(const Options& o) {
  RunManifest m = start("metrics", o.common);
  const Loaded in = load(o.common);
  m.input_digest = in.digest;
  m.config = common_config(o.common);
  m.config["path_sources"] = o.path_sources;
  m.config["directed_paths"] = o.directed_paths;
  m.config["csv"] = o.common.csv;
  const LegislationGraph g = prepare(o.common, in.graph);
  if (g.node_count() == 0) throw ComputeError("structural-metrics", "selected network is empty");

  std::vector<SideFile> side;
  json body = {{"nodes", g.node_count()}, {"edges", g.edge_count()}};
  json degrees = json::object(), lorenz = json::object();
  for (auto [direction, name] : {std::pair{Direction::in, "in"}, {Direction::out, "out"}, {Direction::total, "total"}}) {
    const std::vector<std::size_t> seq = degree_sequence(g, direction);
    const DegreeStats stats = degree_stats(seq);
    degrees[name] = to_json(stats);
    const LorenzGini lg = lorenz_gini(seq);
    lorenz[name] = to_json(lg);
    if (o.common.csv) {
      side.push_back({std::string("metrics_degree_") + name + ".csv", degree_histogram_csv(stats).str()});
      side.push_back({std::string("metrics_lorenz_") + name + ".csv", lorenz_csv(lg).str()});
    }
  }
  body["degree"] = degrees;
  body["lorenz_gini"] = lorenz;
  const ClusteringProfile cl = clustering(g);
  body["clustering"] = to_json(cl);
  const ComponentReport comps = components(g);
  body["components"] = to_json(comps);
  body["paths"] = attempt([&] {
    PathOptions options;
    options.sample_sources = o.path_sources;
    options.seed = o.common.seed;
    options.directed = o.directed_paths;
    const PathMetrics p = path_metrics(g, comps.giant_component, options);
    if (o.common.csv) side.push_back({"metrics_distances.csv", distance_histogram_csv(p).str()});
    return to_json(p);
  });
  body["assortativity"] = assortativity_section(g);
  if (o.common.csv) side.push_back({"metrics_clustering_by_degree.csv", clustering_by_degree_csv(cl).str()});
  emit(o.common, m, body, side);
  return 0;
}

int run_bowtie(const Options& o) {
  RunManifest m = start("bowtie", o.common);
  const Loaded in = load(o.common);
  m.input_digest = in.digest;
  m.config = common_config(o.common);
  m.config["dump_ids"] = o.dump_ids;
  const LegislationGraph g = prepare(o.common, in.graph);
  const BowTieDecomposition b = decompose(g);
  std::vector<SideFile> side;
  json body = to_json(b);
  if (o.dump_ids) body["id_files"] = bowtie_ids(g, b, side, "bowtie_");
  if (o.first_year || o.last_year) {
    const auto [first, last] = resolve_years(o, g);
    m.config["first_year"] = first;
    m.config["last_year"] = last;
    body["core_gc_series"] = to_json(core_gc_series(annual_series(g, first, last)));
  }
  emit(o.common, m, body, side);
  return 0;
}

PowerLawOptions powerlaw_options(const Options& o) {
  PowerLawOptions options;
  options.exact_mle = o.exact_mle;
  options.min_tail = o.min_tail;
  return options;
}

int run_powerlaw(const Options& o) {
  RunManifest m = start("powerlaw", o.common);
  const Loaded in = load(o.common);
  m.input_digest = in.digest;
  m.config = common_config(o.common);
  m.config["direction"] = o.direction;
  m.config["bootstrap_m"] = o.bootstrap;
  m.config["exact_mle"] = o.exact_mle;
  m.config["min_tail"] = o.min_tail;
  const LegislationGraph g = prepare(o.common, in.graph);
  const Direction direction = o.direction == "in" ? Direction::in : o.direction == "out" ? Direction::out : Direction::total;
  const std::vector<std::size_t> seq = degree_sequence(g, direction);
  const std::vector<std::uint64_t> values = as_u64(seq);
  const PowerLawOptions options = powerlaw_options(o);
  const PowerLawFit fit = fit_power_law(values, options);
  const FitResult result = goodness_of_fit(values, fit, o.bootstrap, derive_seed(o.common.seed, "powerlaw"), options);
  json body = to_json(result);
  body["degree_stats"] = to_json(degree_stats(seq));
  body["direction"] = o.direction;
  emit(o.common, m, body, {{"powerlaw_ccdf_" + o.direction + ".csv", powerlaw_ccdf_csv(values, fit).str()}});
  return 0;
}

int run_smallworld(const Options& o) {
  RunManifest m = start("smallworld", o.common);
  const Loaded in = load(o.common);
  m.input_digest = in.digest;
  SmallWorldOptions options = o.small_world;
  options.seed = derive_seed(o.common.seed, "small-world");
  m.config = common_config(o.common);
  m.config["replicas"] = options.replicas;
  m.config["path_factor"] = number(options.path_factor);
  m.config["clustering_factor"] = number(options.clustering_factor);
  m.config["exact_path_limit"] = options.exact_path_limit;
  m.config["sampled_sources"] = options.sampled_sources;
  const LegislationGraph g = prepare(o.common, in.graph);
  emit(o.common, m, to_json(small_world_compare(g, options)), {});
  return 0;
}

int run_temporal(const Options& o) {
  RunManifest m = start("temporal", o.common);
  const Loaded in = load(o.common);
  m.input_digest = in.digest;
  m.config = common_config(o.common);
  m.config.erase("network");
  m.config.erase("current");
  const auto [first, last] = resolve_years(o, in.graph);
  m.config["first_year"] = first;
  m.config["last_year"] = last;
  std::vector<SideFile> side;
  json body = {{"first_year", first}, {"last_year", last}};
  body["networks"] = temporal_section(in.graph, first, last, side, "temporal_");
  emit(o.common, m, body, side);
  return 0;
}

ResilienceConfig resilience_config(const Options& o) {
  ResilienceConfig config;
  config.step_fraction = o.step;
  config.repetitions = o.reps;
  config.degree_mode = o.degree_mode == "adaptive" ? DegreeMode::adaptive : DegreeMode::static_initial;
  config.stop_at = o.stop_at;
  config.seed = derive_seed(o.common.seed, "resilience");
  config.validate();
  return config;
}

int run_resilience(const Options& o) {
  RunManifest m = start("resilience", o.common);
  const Loaded in = load(o.common);
  m.input_digest = in.digest;
  const ResilienceConfig config = resilience_config(o);
  m.config = common_config(o.common);
  m.config["strategy"] = o.strategy;
  m.config["null"] = o.null;
  m.config["protocol"] = to_json(config);
  m.config["protocol"].erase("strategy");
  m.config["protocol"].erase("repetitions");
  m.config["protocol"]["repetitions"] = o.reps;
  const LegislationGraph g = prepare(o.common, in.graph);
  std::vector<SideFile> side;
  json body = resilience_section(g, config, o.strategy != "targeted", o.strategy != "random", o.null, side,
                                 "resilience_curves.csv");
  emit(o.common, m, body, side);
  return 0;
}

int run_report_all(const Options& o) {
  RunManifest m = start("report-all", o.common);
  const Loaded in = load(o.common);
  m.input_digest = in.digest;
  const std::optional<Date> current = parse_current(o.common.current);
  const Network focus = parse_network(o.common.network);
  SmallWorldOptions sw = o.small_world;
  sw.seed = derive_seed(o.common.seed, "small-world");
  const ResilienceConfig rc = resilience_config(o);
  const PowerLawOptions plo = powerlaw_options(o);
  const auto [first, last] = resolve_years(o, in.graph);

  m.config = common_config(o.common);
  m.config["bootstrap_m"] = o.bootstrap;
  m.config["exact_mle"] = o.exact_mle;
  m.config["min_tail"] = o.min_tail;
  m.config["path_sources"] = o.path_sources;
  m.config["small_world"] = {{"replicas", sw.replicas},
                             {"path_factor", number(sw.path_factor)},
                             {"clustering_factor", number(sw.clustering_factor)},
                             {"exact_path_limit", sw.exact_path_limit},
                             {"sampled_sources", sw.sampled_sources}};
  m.config["resilience"] = to_json(rc);
  m.config["resilience"].erase("strategy");
  m.config["resilience"]["repetitions"] = o.reps;
  m.config["first_year"] = first;
  m.config["last_year"] = last;

  const LegislationGraph& full = in.graph;
  std::vector<SideFile> side;
  json body = json::object();
  body["ingest"] = to_json(in.report);

  // network overview
  json overview = json::object();
  const std::optional<LegislationGraph> active = current ? std::optional(snapshot(full, *current)) : std::nullopt;
  for (Network network : kAllNetworks) {
    const std::string name = network_name(network);
    overview[name]["full"] = basic_properties(select_network(full, network), o.path_sources,
                                              derive_seed(o.common.seed, "overview-paths"));
    if (active) {
      overview[name]["current"] = basic_properties(select_network(*active, network), o.path_sources,
                                                   derive_seed(o.common.seed, "overview-paths"));
    }
  }
  body["network_overview"] = overview;

  const LegislationGraph g = select_network(full, focus);
  json structure = {{"network", network_name(focus)}};

  structure["bow_tie"] = attempt([&] { return to_json(decompose(g)); });
  structure["core_gc_series"] = to_json(core_gc_series(annual_series(g, first, last)));

  json degree = json::object();
  for (const auto& entry_spec : {std::pair{Direction::in, "in"}, {Direction::out, "out"}}) {
    const Direction direction = entry_spec.first;
    const std::string name = entry_spec.second;
    const std::vector<std::size_t> seq = degree_sequence(g, direction);
    const LorenzGini lg = lorenz_gini(seq);
    side.push_back({"report_all_lorenz_" + name + ".csv", lorenz_csv(lg).str()});
    const std::vector<std::uint64_t> values = as_u64(seq);
    json entry = {{"stats", to_json(degree_stats(seq))}, {"lorenz_gini", to_json(lg)}};
    entry["power_law"] = attempt([&] {
      const PowerLawFit fit = fit_power_law(values, plo);
      side.push_back({"report_all_powerlaw_ccdf_" + name + ".csv", powerlaw_ccdf_csv(values, fit).str()});
      return to_json(goodness_of_fit(values, fit, o.bootstrap,
                                     derive_seed(o.common.seed, "powerlaw-" + name), plo));
    });
    degree[name] = entry;
  }
  structure["degree"] = degree;

  json small_world = json::object();
  small_world[network_name(focus)] = attempt([&] { return to_json(small_world_compare(g, sw)); });
  if (active) {
    for (Network network : kAllNetworks) {
      const LegislationGraph sub = select_network(*active, network);
      small_world[std::string("current_") + network_name(network)] =
          attempt([&] { return to_json(small_world_compare(sub, sw)); });
    }
  }
  structure["small_world"] = small_world;

  const ClusteringProfile cl = clustering(g);
  side.push_back({"report_all_clustering_by_degree.csv", clustering_by_degree_csv(cl).str()});
  structure["clustering"] = to_json(cl);
  structure["paths"] = attempt([&] {
    PathOptions options;
    options.sample_sources = o.path_sources;
    options.seed = derive_seed(o.common.seed, "overview-paths");
    const PathMetrics p = path_metrics(g, options);
    side.push_back({"report_all_distances.csv", distance_histogram_csv(p).str()});
    return to_json(p);
  });
  structure["assortativity"] = assortativity_section(g);
  body["structure"] = structure;

  body["evolution"] = {{"first_year", first},
                       {"last_year", last},
                       {"networks", temporal_section(full, first, last, side, "report_all_temporal_")}};

  json resilience = json::object();
  for (Network network : kAllNetworks) {
    const std::string name = network_name(network);
    const LegislationGraph sub = select_network(full, network);
    resilience[name] = attempt([&] {
      return resilience_section(sub, rc, true, true, true, side, "report_all_resilience_" + name + ".csv");
    });
  }
  body["resilience"] = resilience;

  emit(o.common, m, body, side);
  return 0;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::usage:
      return kExitUsage;
    case ErrorKind::data:
      return kExitData;
    case ErrorKind::compute:
      return kExitCompute;
  }
  return kExitCompute;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legislation network construction and analysis"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Options o;
  Common& c = o.common;

  CLI::App* ingest_cmd = app.add_subcommand("ingest", "Validate a corpus and report its counts");
  add_common(ingest_cmd, c, true, false);
  ingest_cmd->add_option("-o,--output", o.output, "Also write the normalised corpus (JSONL) here");

  CLI::App* generate_cmd = app.add_subcommand("generate", "Write a synthetic corpus");
  add_common(generate_cmd, c, false, false);
  GeneratorConfig& gc = o.generator;
  generate_cmd->add_option("-o,--output", o.output, "Corpus file, or prefix for --format csv; - for stdout");
  generate_cmd->add_option("--format", o.output_format, "Output format")->check(CLI::IsMember({"jsonl", "csv"}));
  generate_cmd->add_option("--first-year", gc.first_year);
  generate_cmd->add_option("--last-year", gc.last_year);
  generate_cmd->add_option("--docs-per-year", gc.docs_per_year);
  generate_cmd->add_option("--growth-rate", gc.growth_rate, "Yearly growth of the document count");
  generate_cmd->add_option("--schedule", gc.schedule, "Explicit documents per year")->delimiter(',');
  generate_cmd->add_option("--out-degree", gc.initial_out_degree, "Mean citations per document in the first year");
  generate_cmd->add_option("--densification", gc.densification_exponent, "Target densification exponent");
  generate_cmd->add_option("--mixing", gc.preferential_mixing, "Probability of preferential target choice");
  generate_cmd->add_option("--copying", gc.citation_copying, "Probability of also citing a target's citation");
  generate_cmd->add_option("--sector-weights", gc.sector_weights, "Six weights for sectors 1..6")->delimiter(',');
  generate_cmd->add_option("--reftype-weights", gc.reftype_weights, "Six weights in reference-type order")
      ->delimiter(',');
  generate_cmd->add_option("--sunset-probability", gc.sunset_probability);
  generate_cmd->add_option("--sunset-horizon", gc.sunset_horizon_years, "Years");

  CLI::App* filter_cmd = app.add_subcommand("filter", "Extract a sub-network or snapshot as a corpus");
  add_common(filter_cmd, c, true, false);
  filter_cmd->add_option("-o,--output", o.output, "Corpus file, or prefix for --format-out csv; - for stdout");
  filter_cmd->add_option("--format-out", o.output_format)->check(CLI::IsMember({"jsonl", "csv"}));
  filter_cmd->add_option("--sector", o.sector, "Keep one sector (1-6)")->check(CLI::Range(1, 6));
  filter_cmd->add_option("--reftype", o.reftype, "Keep one reference type");
  filter_cmd->add_option("--at", o.at, "Documents in force on this date (YYYY-MM-DD)");
  filter_cmd->add_option("--network", o.filter_network, "Sub-network preset: LN, RN, ICN, LBN");

  CLI::App* metrics_cmd = app.add_subcommand("metrics", "Degree, inequality, clustering, component and path metrics");
  add_common(metrics_cmd, c);
  metrics_cmd->add_option("--path-sources", o.path_sources, "BFS sources to sample (0 = all)");
  metrics_cmd->add_flag("--directed-paths", o.directed_paths, "Follow references forward only");
  metrics_cmd->add_flag("--csv", c.csv, "Write plot tables as CSV side files");

  CLI::App* bowtie_cmd = app.add_subcommand("bowtie", "Bow-tie decomposition");
  add_common(bowtie_cmd, c);
  bowtie_cmd->add_flag("--dump-ids", o.dump_ids, "Write one id list per region");
  bowtie_cmd->add_option("--first-year", o.first_year, "Also report the yearly core/giant-component series");
  bowtie_cmd->add_option("--last-year", o.last_year);

  CLI::App* powerlaw_cmd = app.add_subcommand("powerlaw", "Discrete power-law fit with bootstrap p-value");
  add_common(powerlaw_cmd, c);
  powerlaw_cmd->add_option("--direction", o.direction)->check(CLI::IsMember({"in", "out", "total"}));
  powerlaw_cmd->add_option("-m,--bootstrap", o.bootstrap, "Bootstrap replicas")->check(CLI::PositiveNumber);
  powerlaw_cmd->add_flag("--exact-mle", o.exact_mle, "Use the exact zeta-function MLE");
  powerlaw_cmd->add_option("--min-tail", o.min_tail, "Smallest admissible tail size")->check(CLI::PositiveNumber);

  CLI::App* smallworld_cmd = app.add_subcommand("smallworld", "Compare L and C against Erdos-Renyi nulls");
  add_common(smallworld_cmd, c);
  const auto add_small_world = [&o](CLI::App* cmd) {
    cmd->add_option("--replicas", o.small_world.replicas, "Null graphs")->check(CLI::PositiveNumber);
    cmd->add_option("--path-factor", o.small_world.path_factor);
    cmd->add_option("--clustering-factor", o.small_world.clustering_factor);
    cmd->add_option("--exact-path-limit", o.small_world.exact_path_limit,
                    "Giant components above this size use sampled paths");
    cmd->add_option("--sampled-sources", o.small_world.sampled_sources)->check(CLI::PositiveNumber);
  };
  add_small_world(smallworld_cmd);

  CLI::App* temporal_cmd = app.add_subcommand("temporal", "Yearly snapshots and densification fits");
  add_common(temporal_cmd, c, true, false);
  temporal_cmd->add_option("--first-year", o.first_year);
  temporal_cmd->add_option("--last-year", o.last_year);

  CLI::App* resilience_cmd = app.add_subcommand("resilience", "Random failure and targeted attack curves");
  add_common(resilience_cmd, c);
  const auto add_resilience = [&o](CLI::App* cmd) {
    cmd->add_option("--step", o.step, "Fraction of remaining nodes removed per step");
    cmd->add_option("--reps", o.reps, "Random-failure repetitions (0 = 1000)");
    cmd->add_option("--degree-mode", o.degree_mode)->check(CLI::IsMember({"static", "adaptive"}));
    cmd->add_option("--stop-at", o.stop_at, "Removed-fraction ceiling");
  };
  add_resilience(resilience_cmd);
  resilience_cmd->add_option("--strategy", o.strategy)->check(CLI::IsMember({"random", "targeted", "both"}));
  resilience_cmd->add_flag("--null", o.null, "Also run the protocol on a matched Erdos-Renyi graph");

  CLI::App* all_cmd = app.add_subcommand("report-all", "Full analysis battery in one document");
  add_common(all_cmd, c);
  all_cmd->add_option("-m,--bootstrap", o.bootstrap, "Bootstrap replicas")->check(CLI::PositiveNumber);
  all_cmd->add_flag("--exact-mle", o.exact_mle, "Use the exact zeta-function MLE");
  all_cmd->add_option("--min-tail", o.min_tail, "Smallest admissible tail size")->check(CLI::PositiveNumber);
  all_cmd->add_option("--path-sources", o.path_sources, "BFS sources to sample (0 = all)");
  all_cmd->add_option("--first-year", o.first_year);
  all_cmd->add_option("--last-year", o.last_year);
  add_small_world(all_cmd);
  add_resilience(all_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    set_max_threads(c.threads);
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    if (name == "ingest") return run_ingest(o);
    if (name == "generate") return run_generate(o);
    if (name == "filter") return run_filter(o);
    if (name == "metrics") return run_metrics(o);
    if (name == "bowtie") return run_bowtie(o);
    if (name == "powerlaw") return run_powerlaw(o);
    if (name == "smallworld") return run_smallworld(o);
    if (name == "temporal") return run_temporal(o);
    if (name == "resilience") return run_resilience(o);
    if (name == "report-all") return run_report_all(o);
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "legnet: %s\n", e.what());
    return exit_code(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "legnet: %s\n", e.what());
    return kExitCompute;
  }
}
