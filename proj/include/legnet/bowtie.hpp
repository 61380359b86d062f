#pragma once

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "legnet/graph.hpp"

namespace legnet {

enum class BowTieRegion : std::uint8_t { core, in, out, tubes, tendrils, disconnected };
inline constexpr std::array<BowTieRegion, 6> kAllRegions = {
    BowTieRegion::core,  BowTieRegion::in,       BowTieRegion::out,
    BowTieRegion::tubes, BowTieRegion::tendrils, BowTieRegion::disconnected};
std::string_view region_name(BowTieRegion region);

/// Partition of the nodes relative to the largest strongly connected
/// component (the core):
///   in           reaches the core
///   out          reachable from the core
///   tubes        reachable from IN and reaching OUT without touching the core
///   tendrils     exactly one of the two
///   disconnected everything else (outside the core's weak component, or
///                attached to it without touching IN or OUT that way)
struct BowTieDecomposition {
  std::vector<BowTieRegion> region;  // per node
  std::array<std::vector<NodeIndex>, 6> members;
  std::array<double, 6> fractions{};

  const std::vector<NodeIndex>& of(BowTieRegion r) const {
    return members[static_cast<std::size_t>(r)];
  }
  double fraction(BowTieRegion r) const { return fractions[static_cast<std::size_t>(r)]; }
};

/// Strongly connected component label per node (iterative Tarjan, linear time).
/// Returns the labels and the number of components.
std::pair<std::vector<std::uint32_t>, std::uint32_t> strong_component_labels(const LegislationGraph& g);

/// Nodes of the largest SCC; ties go to the SCC with the smallest document id.
std::vector<NodeIndex> largest_strong_component(const LegislationGraph& g);

/// Throws ComputeError on an empty graph.
BowTieDecomposition decompose(const LegislationGraph& g);

struct CoreGcPoint {
  int year;
  double scc_fraction;
  double gc_fraction;
};

/// Largest SCC and largest weak component as fractions of each snapshot; an
/// empty snapshot yields zeros.
std::vector<CoreGcPoint> core_gc_series(std::span<const std::pair<int, LegislationGraph>> series);

}  // namespace legnet
