#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "legnet/bowtie.hpp"
#include "legnet/generator.hpp"
#include "legnet/metrics.hpp"
#include "legnet/powerlaw.hpp"
#include "legnet/random_models.hpp"
#include "legnet/resilience.hpp"
#include "legnet/temporal.hpp"

namespace legnet {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// x rounded to 9 significant digits.
double sig9(double x);
/// JSON number at 9 significant digits; null for NaN and infinities.
nlohmann::json number(double x);
/// Decimal text at 9 significant digits (CSV cells); empty for NaN.
std::string format_number(double x);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

struct RunManifest {
  std::string command;
  std::string input_digest;  // "sha256:<hex>", empty when there is no input
  nlohmann::json config = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string tool_version{kToolVersion};
  std::string started;  // UTC, ISO 8601
  std::string finished;
};

std::string utc_timestamp();
nlohmann::json to_json(const RunManifest& manifest);

/// {"manifest": ..., "report": body}
nlohmann::json make_document(const RunManifest& manifest, nlohmann::json body);
/// Copy with the manifest timestamps removed.
nlohmann::json normalized(nlohmann::json document);

nlohmann::json to_json(const DegreeStats& stats);
/// Summary only; the Lorenz points go to a CSV side file.
nlohmann::json to_json(const LorenzGini& lg);
nlohmann::json to_json(const ClusteringProfile& profile);
nlohmann::json to_json(const ComponentReport& report);
nlohmann::json to_json(const PathMetrics& paths);
nlohmann::json to_json(const BowTieDecomposition& bowtie);
nlohmann::json to_json(std::span<const CoreGcPoint> series);
nlohmann::json to_json(const PowerLawFit& fit);
nlohmann::json to_json(const FitResult& fit);
nlohmann::json to_json(const SmallWorldReport& report);
nlohmann::json to_json(const SnapshotStat& stat);
nlohmann::json to_json(const DensificationFit& fit);
/// Points plus area under the curve.
nlohmann::json to_json(const ResilienceCurve& curve);
nlohmann::json to_json(const GeneratorConfig& config);
nlohmann::json to_json(const ResilienceConfig& config);

/// RFC-4180 table with a header row. Cells are already formatted.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

CsvTable degree_histogram_csv(const DegreeStats& stats);
CsvTable lorenz_csv(const LorenzGini& lg);
CsvTable distance_histogram_csv(const PathMetrics& paths);
CsvTable clustering_by_degree_csv(const ClusteringProfile& profile);
/// ccdf of the observations plus the fitted tail ccdf at the same k >= x_min.
CsvTable powerlaw_ccdf_csv(std::span<const std::uint64_t> values, const PowerLawFit& fit);
CsvTable snapshot_csv(std::span<const SnapshotStat> series);
/// One row per (curve label, point).
CsvTable resilience_csv(const std::vector<std::pair<std::string, const ResilienceCurve*>>& curves);

/// JSON text, two-space indent, trailing newline.
std::string dump(const nlohmann::json& document);
/// Writes through a temporary file and renames it into place.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace legnet
