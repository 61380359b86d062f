#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "legnet/graph.hpp"

namespace legnet {

/// Synthetic corpus generator settings.
///
/// Documents arrive year by year. Each new document cites earlier documents;
/// a target is picked proportionally to (in-degree + 1) with probability
/// preferential_mixing and uniformly otherwise. After each citation, with
/// probability citation_copying the document also cites one of the target's
/// own citations. Per-document citation budgets are chosen so that the
/// cumulative edge count follows
///   E(N) = initial_out_degree * N1 * (N / N1) ^ densification_exponent
/// where N1 is the first year's document count.
struct GeneratorConfig {
  int first_year = 1951;
  int last_year = 2013;
  std::size_t docs_per_year = 100;
  /// Year t (0-based) receives round(docs_per_year * (1 + growth_rate)^t) documents.
  double growth_rate = 0.0;
  /// Explicit per-year counts; overrides docs_per_year/growth_rate when non-empty.
  std::vector<std::size_t> schedule;
  double initial_out_degree = 3.0;
  double densification_exponent = 1.1;
  double preferential_mixing = 0.8;
  double citation_copying = 0.3;
  /// Indexed by sector code - 1. Defaults follow the EUR-Lex document counts.
  std::array<double, kSectorCount> sector_weights = {8652, 8564, 120550, 1231, 73123, 37570};
  /// Indexed by RefType. amended_by and amendment_to are drawn as one
  /// amendment event of weight (w_amended_by + w_amendment_to) / 2, which
  /// emits the amendment_to edge and its amended_by reciprocal.
  std::array<double, kRefTypeCount> reftype_weights = {9.50, 9.50, 23.50, 54.93, 2.00, 0.57};
  double sunset_probability = 0.0;
  int sunset_horizon_years = 30;
  std::uint64_t seed = 42;

  /// Throws ConfigError on an invalid or infeasible configuration.
  void validate() const;
  /// Documents per year, one entry per year in [first_year, last_year].
  std::vector<std::size_t> docs_schedule() const;
};

/// Deterministic for a fixed config. Citations always point to documents with
/// an earlier or equal effect date; amended_by reciprocals are the only
/// forward-pointing edges. The result is sealed.
LegislationGraph generate(const GeneratorConfig& config);

}  // namespace legnet
