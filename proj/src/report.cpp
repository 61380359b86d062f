#include "legnet/report.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "legnet/csv.hpp"
#include "legnet/error.hpp"

namespace legnet {

using nlohmann::json;

double sig9(double x) {
  if (!std::isfinite(x) || x == 0) return x;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.9g", x);
  return std::strtod(buffer, nullptr);
}

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return sig9(x);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.9g", x);
  return buffer;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw ComputeError("cli-reports", "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

json to_json(const RunManifest& m) {
  return {{"command", m.command},   {"input_digest", m.input_digest.empty() ? json(nullptr) : json(m.input_digest)},
          {"config", m.config},     {"seed", m.seed},
          {"tool_version", m.tool_version}, {"started", m.started},
          {"finished", m.finished}};
}

json make_document(const RunManifest& manifest, json body) {
  return {{"manifest", to_json(manifest)}, {"report", std::move(body)}};
}

json normalized(json document) {
  if (document.contains("manifest")) {
    document["manifest"].erase("started");
    document["manifest"].erase("finished");
  }
  return document;
}

namespace {

template <typename Map>
json pairs(const Map& m) {
  json out = json::array();
  for (const auto& [k, v] : m) out.push_back({k, v});
  return out;
}

}  // namespace

json to_json(const DegreeStats& s) {
  return {{"n", s.n}, {"mean", number(s.mean)}, {"stddev", number(s.stddev)}, {"max", s.max},
          {"histogram", pairs(s.histogram)}};
}

json to_json(const LorenzGini& lg) {
  return {{"gini", number(lg.gini)},
          {"top1_share", number(lg.top1_share)},
          {"pareto80_node_fraction", number(lg.pareto80_node_fraction)},
          {"all_zero", lg.all_zero},
          {"lorenz_point_count", lg.lorenz_points.size()}};
}

json to_json(const ClusteringProfile& c) {
  json per_degree = json::array();
  for (const auto& [k, value] : c.per_degree) {
    per_degree.push_back({{"k", k}, {"nodes", c.per_degree_count.at(k)}, {"c", number(value)}});
  }
  return {{"global_avg", number(c.global_avg)},
          {"loglog_slope", number(c.loglog_slope)},
          {"slope_points", c.slope_points},
          {"per_degree", per_degree}};
}

json to_json(const ComponentReport& r) {
  return {{"giant_component_size", r.giant_component.size()},
          {"gc_fraction", number(r.gc_fraction)},
          {"isolated_count", r.isolated_count},
          {"component_count", r.component_count}};
}

json to_json(const PathMetrics& p) {
  return {{"average_path_length", number(p.average_path_length)},
          {"diameter", p.diameter},
          {"diameter_is_lower_bound", p.sampled},
          {"restricted_to", p.restricted_to},
          {"component_size", p.component_size},
          {"sources", p.sources},
          {"sampled", p.sampled},
          {"directed", p.directed},
          {"distance_histogram", pairs(p.distance_histogram)}};
}

json to_json(const BowTieDecomposition& b) {
  json regions = json::object();
  for (BowTieRegion r : kAllRegions) {
    regions[std::string(region_name(r))] = {{"nodes", b.of(r).size()}, {"fraction", number(b.fraction(r))}};
  }
  return {{"nodes", b.region.size()}, {"regions", regions}};
}

json to_json(std::span<const CoreGcPoint> series) {
  json out = json::array();
  for (const CoreGcPoint& p : series) {
    out.push_back({{"year", p.year}, {"scc_fraction", number(p.scc_fraction)}, {"gc_fraction", number(p.gc_fraction)}});
  }
  return out;
}

json to_json(const PowerLawFit& f) {
  return {{"gamma", number(f.gamma)},     {"x_min", f.x_min}, {"n_tail", f.n_tail},
          {"ks_statistic", number(f.ks_statistic)}, {"n", f.n},         {"excluded_zeros", f.excluded_zeros}};
}

json to_json(const FitResult& f) {
  return {{"gamma", number(f.gamma)},
          {"gamma_spread", number(f.gamma_spread)},
          {"x_min", f.x_min},
          {"x_min_spread", number(f.x_min_spread)},
          {"n_tail", f.n_tail},
          {"n_tail_spread", number(f.n_tail_spread)},
          {"ks_statistic", number(f.ks_statistic)},
          {"p_value", number(f.p_value)},
          {"bootstrap_m", f.bootstrap_m},
          {"failed_replicas", f.failed_replicas},
          {"low_resolution", f.low_resolution},
          {"n", f.n},
          {"excluded_zeros", f.excluded_zeros}};
}

json to_json(const SmallWorldReport& r) {
  return {{"l_net", number(r.l_net)},
          {"c_net", number(r.c_net)},
          {"l_rand", number(r.l_rand)},
          {"c_rand", number(r.c_rand)},
          {"small_world_verdict", r.small_world_verdict},
          {"rand_replicas", r.rand_replicas},
          {"skipped_replicas", r.skipped_replicas},
          {"l_rand_analytic", number(r.l_rand_analytic)},
          {"c_rand_analytic", number(r.c_rand_analytic)},
          {"net_paths_sampled", r.net_paths_sampled}};
}

json to_json(const SnapshotStat& s) {
  json sectors = json::object(), kinds = json::object();
  for (Sector sector : kAllSectors) sectors[std::to_string(sector_code(sector))] = s.per_sector[sector_slot(sector)];
  for (RefType kind : kAllRefTypes) kinds[std::string(reftype_token(kind))] = s.per_reftype[reftype_slot(kind)];
  return {{"year", s.year},
          {"nodes", s.nodes},
          {"edges", s.edges},
          {"per_sector", sectors},
          {"per_reftype", kinds},
          {"scc_fraction", number(s.scc_fraction)},
          {"gc_fraction", number(s.gc_fraction)}};
}

json to_json(const DensificationFit& f) {
  return {{"slope", number(f.slope)},
          {"intercept", number(f.intercept)},
          {"r_squared", number(f.r_squared)},
          {"points_used", f.points_used},
          {"points_excluded", f.points_excluded}};
}

json to_json(const ResilienceCurve& c) {
  json points = json::array();
  for (const ResiliencePoint& p : c.points) {
    points.push_back({number(p.removed_fraction), number(p.gc_of_remaining), number(p.gc_of_original)});
  }
  return {{"averaged_over", c.averaged_over},
          {"area_under_curve", number(c.area_under_curve())},
          {"columns", {"removed_fraction", "gc_of_remaining", "gc_of_original"}},
          {"points", points}};
}

json to_json(const GeneratorConfig& c) {
  json sectors = json::array(), kinds = json::object();
  for (double w : c.sector_weights) sectors.push_back(number(w));
  for (RefType kind : kAllRefTypes) kinds[std::string(reftype_token(kind))] = number(c.reftype_weights[reftype_slot(kind)]);
  return {{"first_year", c.first_year},
          {"last_year", c.last_year},
          {"docs_per_year", c.docs_per_year},
          {"growth_rate", number(c.growth_rate)},
          {"schedule", c.schedule},
          {"initial_out_degree", number(c.initial_out_degree)},
          {"densification_exponent", number(c.densification_exponent)},
          {"preferential_mixing", number(c.preferential_mixing)},
          {"citation_copying", number(c.citation_copying)},
          {"sector_weights", sectors},
          {"reftype_weights", kinds},
          {"sunset_probability", number(c.sunset_probability)},
          {"sunset_horizon_years", c.sunset_horizon_years},
          {"seed", c.seed}};
}

json to_json(const ResilienceConfig& c) {
  return {{"strategy", c.strategy == AttackStrategy::random ? "random" : "targeted"},
          {"step_fraction", number(c.step_fraction)},
          {"repetitions", c.effective_repetitions()},
          {"degree_mode", c.degree_mode == DegreeMode::static_initial ? "static" : "adaptive"},
          {"seed", c.seed},
          {"stop_at", number(c.stop_at)}};
}

void CsvTable::add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

std::string CsvTable::str() const {
  std::string out = csv::join(header_);
  out += "\r\n";
  for (const auto& row : rows_) {
    out += csv::join(row);
    out += "\r\n";
  }
  return out;
}

CsvTable degree_histogram_csv(const DegreeStats& stats) {
  CsvTable t({"degree", "nodes"});
  for (const auto& [k, count] : stats.histogram) t.add({std::to_string(k), std::to_string(count)});
  return t;
}

CsvTable lorenz_csv(const LorenzGini& lg) {
  CsvTable t({"node_fraction", "degree_fraction"});
  for (const auto& [x, y] : lg.lorenz_points) t.add({format_number(x), format_number(y)});
  return t;
}

CsvTable distance_histogram_csv(const PathMetrics& paths) {
  CsvTable t({"distance", "pairs"});
  for (const auto& [d, count] : paths.distance_histogram) t.add({std::to_string(d), std::to_string(count)});
  return t;
}

CsvTable clustering_by_degree_csv(const ClusteringProfile& profile) {
  CsvTable t({"degree", "nodes", "mean_clustering"});
  for (const auto& [k, c] : profile.per_degree) {
    t.add({std::to_string(k), std::to_string(profile.per_degree_count.at(k)), format_number(c)});
  }
  return t;
}

CsvTable powerlaw_ccdf_csv(std::span<const std::uint64_t> values, const PowerLawFit& fit) {
  CsvTable t({"k", "empirical_ccdf", "fitted_ccdf"});
  const DiscretePowerLaw model(fit.gamma, fit.x_min, 1);
  std::vector<std::uint64_t> positive;
  for (std::uint64_t v : values)
    if (v > 0) positive.push_back(v);
  const double tail_share = positive.empty() ? 0.0 : static_cast<double>(fit.n_tail) / static_cast<double>(positive.size());
  for (const auto& [k, share] : ccdf(positive)) {
    t.add({std::to_string(k), format_number(share), k >= fit.x_min ? format_number(tail_share * model.ccdf(k)) : ""});
  }
  return t;
}

CsvTable snapshot_csv(std::span<const SnapshotStat> series) {
  std::vector<std::string> header = {"year", "nodes", "edges"};
  for (Sector s : kAllSectors) header.push_back("sector_" + std::to_string(sector_code(s)));
  for (RefType k : kAllRefTypes) header.push_back(std::string(reftype_token(k)));
  header.push_back("scc_fraction");
  header.push_back("gc_fraction");
  CsvTable t(std::move(header));
  for (const SnapshotStat& s : series) {
    std::vector<std::string> row = {std::to_string(s.year), std::to_string(s.nodes), std::to_string(s.edges)};
    for (std::size_t c : s.per_sector) row.push_back(std::to_string(c));
    for (std::size_t c : s.per_reftype) row.push_back(std::to_string(c));
    row.push_back(format_number(s.scc_fraction));
    row.push_back(format_number(s.gc_fraction));
    t.add(std::move(row));
  }
  return t;
}

CsvTable resilience_csv(const std::vector<std::pair<std::string, const ResilienceCurve*>>& curves) {
  CsvTable t({"curve", "removed_fraction", "gc_of_remaining", "gc_of_original"});
  for (const auto& [label, curve] : curves) {
    for (const ResiliencePoint& p : curve->points) {
      t.add({label, format_number(p.removed_fraction), format_number(p.gc_of_remaining), format_number(p.gc_of_original)});
    }
  }
  return t;
}

std::string dump(const json& document) { return document.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  const std::filesystem::path temporary = path.string() + ".tmp";
  {
    std::ofstream out(temporary, std::ios::binary);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw ConfigError("cli-reports", "cannot write " + path.string());
  }
  std::filesystem::rename(temporary, path, ec);
  if (ec) throw ConfigError("cli-reports", "cannot write " + path.string() + ": " + ec.message());
}

}  // namespace legnet
