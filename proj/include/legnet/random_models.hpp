#pragma once

#include <cstdint>

#include "legnet/graph.hpp"

namespace legnet {

/// Directed G(n, m): exactly m distinct directed edges without self-loops,
/// chosen uniformly. Nodes are "ER0000000".. with sector 3 and no expiry.
/// Throws ConfigError when m > n(n-1).
LegislationGraph erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed);

struct SmallWorldOptions {
  std::size_t replicas = 10;
  std::uint64_t seed = 0;
  double path_factor = 1.5;         // L_net <= path_factor * L_rand
  double clustering_factor = 10.0;  // C_net >= clustering_factor * C_rand
  /// Giant components larger than this use sampled BFS.
  std::size_t exact_path_limit = 100000;
  std::size_t sampled_sources = 1000;
};

struct SmallWorldReport {
  double l_net = 0;
  double c_net = 0;
  double l_rand = 0;
  double c_rand = 0;
  bool small_world_verdict = false;
  std::size_t rand_replicas = 0;   // replicas that contributed
  std::size_t skipped_replicas = 0;
  double l_rand_analytic = 0;      // ln n / ln <k>
  double c_rand_analytic = 0;      // <k> / n
  bool net_paths_sampled = false;
};

/// L and C measured on the giant component of the projection (clustering is
/// averaged over giant-component nodes).
struct GiantComponentMetrics {
  double average_path_length = 0;
  double clustering = 0;
  std::size_t size = 0;
  bool sampled = false;
};
GiantComponentMetrics giant_component_metrics(const LegislationGraph& g, std::size_t exact_path_limit,
                                              std::size_t sampled_sources, std::uint64_t seed);

/// Compares g against ER replicas with the same node and typed edge counts.
/// Throws ComputeError when g's giant component has fewer than 10 nodes or
/// every replica is degenerate.
SmallWorldReport small_world_compare(const LegislationGraph& g, const SmallWorldOptions& options = {});

}  // namespace legnet
