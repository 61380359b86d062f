#pragma once

#include <array>
#include <span>
#include <vector>

#include "legnet/graph.hpp"

namespace legnet {

struct SnapshotStat {
  int year = 0;
  std::size_t nodes = 0;  // N: active documents
  std::size_t edges = 0;  // E: active references
  std::array<std::size_t, kSectorCount> per_sector{};
  std::array<std::size_t, kRefTypeCount> per_reftype{};
  double scc_fraction = 0;
  double gc_fraction = 0;
};

/// One stat per year, from the December 31 snapshots.
std::vector<SnapshotStat> evolution_series(const LegislationGraph& g, int first_year, int last_year);

/// Counts of a single snapshot (the year field is left to the caller).
SnapshotStat snapshot_stat(const LegislationGraph& snapshot);

struct DensificationFit {
  double slope = 0;  // densification exponent
  double intercept = 0;
  double r_squared = 0;
  std::size_t points_used = 0;
  std::size_t points_excluded = 0;  // N < 2 or E = 0
};

/// Ordinary least squares of ln E on ln N over points with N >= 2 and E >= 1.
/// Throws ComputeError with fewer than three usable points or constant N.
DensificationFit densification_fit(std::span<const SnapshotStat> series);

}  // namespace legnet
