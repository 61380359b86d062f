#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "legnet/graph.hpp"

namespace legnet {

struct DegreeStats {
  std::size_t n = 0;
  double mean = 0;
  double stddev = 0;  // population standard deviation
  std::size_t max = 0;
  std::map<std::size_t, std::size_t> histogram;  // degree -> node count
};

/// Typed-multigraph degree of every node, in node order.
std::vector<std::size_t> degree_sequence(const LegislationGraph& g, Direction direction);

/// Throws ComputeError on an empty graph.
DegreeStats degree_stats(const LegislationGraph& g, Direction direction);
DegreeStats degree_stats(std::span<const std::size_t> degrees);

struct LorenzGini {
  /// (cumulative node fraction, cumulative degree fraction), nodes in
  /// ascending degree order; starts at (0,0) and ends at (1,1).
  std::vector<std::pair<double, double>> lorenz_points;
  double gini = 0;
  /// Share of all links held by the top 1% (rounded up) highest-degree nodes.
  double top1_share = 0;
  /// Smallest fraction of highest-degree nodes holding at least 80% of links.
  double pareto80_node_fraction = 0;
  /// Set when every degree is zero; gini is then reported as 0.
  bool all_zero = false;
};

/// Gini from the sorted-degree formula
///   G = 2 * sum_i i * x_(i) / (n * sum x) - (n + 1) / n
/// with the numerator evaluated in exact integer arithmetic.
LorenzGini lorenz_gini(std::span<const std::size_t> degrees);
LorenzGini lorenz_gini(const LegislationGraph& g, Direction direction);

struct ClusteringProfile {
  double global_avg = 0;
  std::map<std::size_t, double> per_degree;             // k -> mean local coefficient
  std::map<std::size_t, std::size_t> per_degree_count;  // k -> nodes of degree k
  double loglog_slope = 0;  // NaN when fewer than two usable degrees
  std::size_t slope_points = 0;
  std::vector<double> local;  // per node
};

/// Local coefficient on the simple projection, 0 for degree < 2.
std::vector<double> local_clustering(const SimpleProjection& projection);

/// Global mean over all nodes; the C(k) log-log slope uses degrees with at
/// least `min_nodes_per_degree` representatives and C(k) > 0.
ClusteringProfile clustering(const LegislationGraph& g, std::size_t min_nodes_per_degree = 5);

struct ComponentReport {
  std::vector<NodeIndex> giant_component;  // ascending node indices
  double gc_fraction = 0;
  std::size_t isolated_count = 0;  // zero typed degree
  std::size_t component_count = 0;
};

/// Weakly connected components; ties for the largest go to the component
/// holding the smallest document id.
ComponentReport components(const LegislationGraph& g);

/// Component label per node (labels numbered in order of first node).
std::vector<std::uint32_t> weak_component_labels(const SimpleProjection& projection);

struct PathOptions {
  /// 0 runs BFS from every giant-component node; otherwise from this many
  /// sources drawn uniformly without replacement.
  std::size_t sample_sources = 0;
  std::uint64_t seed = 0;
  /// Follow typed edges forward instead of the undirected projection.
  bool directed = false;
};

struct PathMetrics {
  double average_path_length = 0;
  std::size_t diameter = 0;
  std::map<std::size_t, std::uint64_t> distance_histogram;  // length -> ordered pairs
  std::string restricted_to;  // smallest document id in the giant component
  std::size_t component_size = 0;
  std::size_t sources = 0;
  bool sampled = false;  // diameter is then a lower bound
  bool directed = false;
};

/// Shortest-path statistics inside the giant component, averaged over
/// ordered reachable pairs. Throws ComputeError when the giant component has
/// fewer than two nodes.
PathMetrics path_metrics(const LegislationGraph& g, const PathOptions& options = {});
PathMetrics path_metrics(const LegislationGraph& g, std::span<const NodeIndex> component,
                         const PathOptions& options);

enum class AssortativityCriterion { degree, sector };

/// Degree: Pearson correlation of projection degrees over both orientations
/// of every projection edge. Sector: Newman's attribute mixing coefficient.
/// Throws ComputeError with fewer than two edges or zero variance.
double assortativity(const LegislationGraph& g, AssortativityCriterion criterion);

}  // namespace legnet
