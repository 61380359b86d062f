#include "legnet/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "legnet/error.hpp"
#include "legnet/metrics.hpp"
#include "legnet/parallel.hpp"
#include "legnet/random.hpp"

namespace legnet {
namespace {

// Floyd's algorithm: a uniform m-subset of [0, universe).
std::vector<std::uint64_t> sample_subset(std::uint64_t universe, std::uint64_t m, Rng& rng) {
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(static_cast<std::size_t>(m) * 2);
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t j = universe - m; j < universe; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    const std::uint64_t value = picked.insert(t).second ? t : j;
    if (value == j) picked.insert(j);
    out.push_back(value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LegislationGraph erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t slots = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1);
  if (m > slots) {
    throw ConfigError("random-models", "cannot place " + std::to_string(m) + " directed edges on " +
                                           std::to_string(n) + " nodes");
  }
  Rng rng(derive_seed(seed, "erdos-renyi"));
  LegislationGraph g;
  const std::size_t width = std::max<std::size_t>(7, std::to_string(n).size());
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    std::string id = "ER" + std::string(width - digits.size(), '0') + digits;
    g.add_document({DocId(std::move(id)), Sector::legislation, Date(1970, 1, 1), Date::sentinel(), false});
  }
  // Slot s encodes source s / (n-1) and the s % (n-1)-th other node.
  auto add_slot = [&](std::uint64_t s) {
    const auto u = static_cast<NodeIndex>(s / (n - 1));
    auto v = static_cast<NodeIndex>(s % (n - 1));
    if (v >= u) ++v;
    g.add_edge(u, v, RefType::other);
  };
  if (m <= slots / 2) {
    for (std::uint64_t s : sample_subset(slots, m, rng)) add_slot(s);
  } else {
    const auto excluded = sample_subset(slots, slots - m, rng);
    std::size_t k = 0;
    for (std::uint64_t s = 0; s < slots; ++s) {
      if (k < excluded.size() && excluded[k] == s) {
        ++k;
        continue;
      }
      add_slot(s);
    }
  }
  g.seal();
  return g;
}

GiantComponentMetrics giant_component_metrics(const LegislationGraph& g, std::size_t exact_path_limit,
                                              std::size_t sampled_sources, std::uint64_t seed) {
  const ComponentReport report = components(g);
  GiantComponentMetrics out;
  out.size = report.giant_component.size();
  PathOptions options;
  options.seed = seed;
  if (out.size > exact_path_limit) options.sample_sources = sampled_sources;
  const PathMetrics paths = path_metrics(g, report.giant_component, options);
  out.average_path_length = paths.average_path_length;
  out.sampled = paths.sampled;
  // Clustering restricted to the component: neighborhoods never leave it.
  const auto local = local_clustering(g.projection());
  double sum = 0;
  for (NodeIndex v : report.giant_component) sum += local[v];
  out.clustering = sum / static_cast<double>(out.size);
  return out;
}

SmallWorldReport small_world_compare(const LegislationGraph& g, const SmallWorldOptions& options) {
  g.require_sealed("small_world_compare");
  if (options.replicas < 1) throw ConfigError("random-models", "need at least one null replica");
  const ComponentReport report = components(g);
  if (report.giant_component.size() < 10) {
    throw ComputeError("random-models", "giant component has fewer than 10 nodes");
  }
  SmallWorldReport out;
  const auto net = giant_component_metrics(g, options.exact_path_limit, options.sampled_sources,
                                           derive_seed(options.seed, "small-world-net"));
  out.l_net = net.average_path_length;
  out.c_net = net.clustering;
  out.net_paths_sampled = net.sampled;

  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  struct Null {
    bool ok = false;
    double l = 0;
    double c = 0;
  };
  std::vector<Null> nulls(options.replicas);
  parallel_for(options.replicas, [&](std::size_t r) {
    const LegislationGraph null = erdos_renyi(n, m, derive_seed(options.seed, "small-world-null", r));
    try {
      const auto metrics = giant_component_metrics(null, options.exact_path_limit, options.sampled_sources,
                                                   derive_seed(options.seed, "small-world-null-paths", r));
      nulls[r] = {true, metrics.average_path_length, metrics.clustering};
    } catch (const ComputeError&) {
      nulls[r] = {};
    }
  });
  double l_sum = 0, c_sum = 0;
  for (const Null& null : nulls) {
    if (!null.ok) {
      ++out.skipped_replicas;
      continue;
    }
    ++out.rand_replicas;
    l_sum += null.l;
    c_sum += null.c;
  }
  if (out.rand_replicas == 0) throw ComputeError("random-models", "every null replica was degenerate");
  out.l_rand = l_sum / static_cast<double>(out.rand_replicas);
  out.c_rand = c_sum / static_cast<double>(out.rand_replicas);

  const double mean_degree = 2.0 * static_cast<double>(m) / static_cast<double>(n);
  out.l_rand_analytic = mean_degree > 1 ? std::log(static_cast<double>(n)) / std::log(mean_degree) : 0.0;
  out.c_rand_analytic = mean_degree / static_cast<double>(n);
  out.small_world_verdict = out.l_net <= options.path_factor * out.l_rand &&
                            out.c_net >= options.clustering_factor * out.c_rand;
  return out;
}

}  // namespace legnet
