#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "legnet/graph.hpp"

namespace legnet {

enum class AttackStrategy { random, targeted };
enum class DegreeMode { static_initial, adaptive };

struct ResilienceConfig {
  AttackStrategy strategy = AttackStrategy::random;
  double step_fraction = 0.05;  // of the remaining nodes, rounded up
  /// 0 selects the default: 1000 for random failures, 1 for targeted attacks.
  std::size_t repetitions = 0;
  DegreeMode degree_mode = DegreeMode::static_initial;
  std::uint64_t seed = 0;
  double stop_at = 0.99;  // removed-fraction ceiling

  std::size_t effective_repetitions() const;
  void validate() const;  // throws ConfigError
};

struct ResiliencePoint {
  double removed_fraction = 0;  // of the original node count
  double gc_of_remaining = 0;
  double gc_of_original = 0;
};

struct ResilienceCurve {
  std::vector<ResiliencePoint> points;
  std::size_t averaged_over = 0;
  /// Trapezoidal area under gc_of_original over the removed fraction.
  double area_under_curve() const;
};

/// Cumulative removed counts: 0, then each step adds ceil(step * remaining)
/// until the removed fraction reaches stop_at or nothing remains.
std::vector<std::size_t> removal_schedule(std::size_t n, double step_fraction, double stop_at);

/// Progressive node removal tracking the largest weak component. Targeted
/// attacks remove by total typed degree (descending, ties by id), either on
/// the initial degrees or recomputed after every step. Throws ComputeError
/// for graphs with fewer than 20 nodes.
ResilienceCurve simulate(const LegislationGraph& g, const ResilienceConfig& config);

/// The same protocol on g and on a directed Erdos-Renyi graph with g's node
/// and edge counts. Returns (graph curve, null curve).
std::pair<ResilienceCurve, ResilienceCurve> compare_with_null(const LegislationGraph& g,
                                                              const ResilienceConfig& config);

}  // namespace legnet
