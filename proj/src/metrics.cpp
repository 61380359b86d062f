#include "legnet/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "legnet/error.hpp"
#include "legnet/parallel.hpp"
#include "legnet/random.hpp"

namespace legnet {
namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

struct OlsFit {
  double slope;
  double intercept;
};

OlsFit least_squares(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

/// Bit-parallel BFS over a compact pull adjacency: bit i of frontier[v] is
/// set when source i first reached v at the current level. Adds the number of
/// (source, v) pairs at each distance to the histogram.
void bfs_block(const std::vector<std::size_t>& offsets, const std::vector<std::uint32_t>& pull,
               std::span<const std::uint32_t> sources, std::vector<std::uint64_t>& histogram) {
  const std::size_t c = offsets.size() - 1;
  std::vector<std::uint64_t> seen(c, 0), frontier(c, 0), next(c, 0);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    seen[sources[i]] |= std::uint64_t{1} << i;
    frontier[sources[i]] |= std::uint64_t{1} << i;
  }
  const std::uint64_t full = sources.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sources.size()) - 1;
  for (std::size_t level = 1;; ++level) {
    std::uint64_t reached = 0;
    for (std::size_t v = 0; v < c; ++v) {
      if (seen[v] == full) {
        next[v] = 0;
        continue;
      }
      std::uint64_t acc = 0;
      for (std::size_t k = offsets[v]; k < offsets[v + 1]; ++k) acc |= frontier[pull[k]];
      acc &= ~seen[v];
      next[v] = acc;
      reached += static_cast<std::uint64_t>(std::popcount(acc));
    }
    if (reached == 0) break;
    if (histogram.size() <= level) histogram.resize(level + 1, 0);
    histogram[level] += reached;
    for (std::size_t v = 0; v < c; ++v) seen[v] |= next[v];
    frontier.swap(next);
  }
}

}  // namespace

std::vector<std::size_t> degree_sequence(const LegislationGraph& g, Direction direction) {
  g.require_sealed("degree_sequence");
  std::vector<std::size_t> degrees(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v, direction);
  return degrees;
}

DegreeStats degree_stats(std::span<const std::size_t> degrees) {
  if (degrees.empty()) throw ComputeError("structural-metrics", "degree statistics of an empty graph");
  DegreeStats stats;
  stats.n = degrees.size();
  double sum = 0;
  for (std::size_t k : degrees) {
    ++stats.histogram[k];
    sum += static_cast<double>(k);
    stats.max = std::max(stats.max, k);
  }
  stats.mean = sum / static_cast<double>(stats.n);
  double ss = 0;
  for (const auto& [k, count] : stats.histogram) {
    const double d = static_cast<double>(k) - stats.mean;
    ss += d * d * static_cast<double>(count);
  }
  stats.stddev = std::sqrt(ss / static_cast<double>(stats.n));
  return stats;
}

DegreeStats degree_stats(const LegislationGraph& g, Direction direction) {
  const auto degrees = degree_sequence(g, direction);
  return degree_stats(degrees);
}

LorenzGini lorenz_gini(std::span<const std::size_t> degrees) {
  if (degrees.empty()) throw ComputeError("structural-metrics", "Lorenz curve of an empty graph");
  std::vector<std::size_t> sorted(degrees.begin(), degrees.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  __int128 weighted = 0;
  __int128 total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    weighted += static_cast<__int128>(i + 1) * sorted[i];
    total += sorted[i];
  }

  LorenzGini out;
  out.lorenz_points.reserve(n + 1);
  out.lorenz_points.emplace_back(0.0, 0.0);
  if (total == 0) {
    out.all_zero = true;
    for (std::size_t i = 1; i <= n; ++i) {
      const double f = static_cast<double>(i) / static_cast<double>(n);
      out.lorenz_points.emplace_back(f, f);
    }
    return out;
  }

  const __int128 numerator = 2 * weighted - static_cast<__int128>(n + 1) * total;
  out.gini = static_cast<double>(numerator) /
             (static_cast<double>(n) * static_cast<double>(total));

  __int128 running = 0;
  for (std::size_t i = 0; i < n; ++i) {
    running += sorted[i];
    out.lorenz_points.emplace_back(static_cast<double>(i + 1) / static_cast<double>(n),
                                   static_cast<double>(running) / static_cast<double>(total));
  }

  const std::size_t top1 = (n + 99) / 100;
  __int128 top = 0;
  for (std::size_t i = 0; i < top1; ++i) top += sorted[n - 1 - i];
  out.top1_share = static_cast<double>(top) / static_cast<double>(total);

  top = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    top += sorted[n - k];
    if (5 * top >= 4 * total) {
      out.pareto80_node_fraction = static_cast<double>(k) / static_cast<double>(n);
      break;
    }
  }
  return out;
}

LorenzGini lorenz_gini(const LegislationGraph& g, Direction direction) {
  const auto degrees = degree_sequence(g, direction);
  return lorenz_gini(degrees);
}

std::vector<double> local_clustering(const SimpleProjection& projection) {
  const std::size_t n = projection.node_count();
  std::vector<double> local(n, 0.0);
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t c) {
    std::vector<NodeIndex> mark(n, static_cast<NodeIndex>(kUnvisited));
    const std::size_t last = std::min(n, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < last; ++i) {
      const auto v = static_cast<NodeIndex>(i);
      const auto nv = projection.neighbors(v);
      const std::size_t d = nv.size();
      if (d < 2) continue;
      for (NodeIndex u : nv) mark[u] = v;
      std::uint64_t links = 0;
      for (NodeIndex u : nv) {
        for (NodeIndex w : projection.neighbors(u)) {
          if (w > u && mark[w] == v) ++links;
        }
      }
      local[v] = 2.0 * static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
    }
  });
  return local;
}

ClusteringProfile clustering(const LegislationGraph& g, std::size_t min_nodes_per_degree) {
  const SimpleProjection& p = g.projection();
  ClusteringProfile out;
  out.local = local_clustering(p);
  const std::size_t n = p.node_count();
  std::map<std::size_t, double> sums;
  double total = 0;
  for (NodeIndex v = 0; v < n; ++v) {
    const std::size_t k = p.degree(v);
    sums[k] += out.local[v];
    ++out.per_degree_count[k];
    total += out.local[v];
  }
  out.global_avg = n ? total / static_cast<double>(n) : 0.0;
  std::vector<double> xs, ys;
  for (const auto& [k, sum] : sums) {
    const double mean = sum / static_cast<double>(out.per_degree_count[k]);
    out.per_degree[k] = mean;
    if (k >= 1 && mean > 0 && out.per_degree_count[k] >= min_nodes_per_degree) {
      xs.push_back(std::log(static_cast<double>(k)));
      ys.push_back(std::log(mean));
    }
  }
  out.slope_points = xs.size();
  out.loglog_slope = xs.size() >= 2 ? least_squares(xs, ys).slope
                                    : std::numeric_limits<double>::quiet_NaN();
  return out;
}

std::vector<std::uint32_t> weak_component_labels(const SimpleProjection& projection) {
  const std::size_t n = projection.node_count();
  std::vector<std::uint32_t> label(n, kUnvisited);
  std::vector<NodeIndex> queue;
  std::uint32_t next = 0;
  for (NodeIndex s = 0; s < n; ++s) {
    if (label[s] != kUnvisited) continue;
    label[s] = next;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeIndex w : projection.neighbors(queue[head])) {
        if (label[w] == kUnvisited) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

ComponentReport components(const LegislationGraph& g) {
  const SimpleProjection& p = g.projection();
  const std::size_t n = g.node_count();
  ComponentReport out;
  for (NodeIndex v = 0; v < n; ++v) {
    if (g.degree(v, Direction::total) == 0) ++out.isolated_count;
  }
  if (n == 0) return out;

  const auto label = weak_component_labels(p);
  const std::uint32_t count = *std::max_element(label.begin(), label.end()) + 1;
  out.component_count = count;
  std::vector<std::size_t> size(count, 0);
  std::vector<NodeIndex> min_id_node(count, static_cast<NodeIndex>(kUnvisited));
  for (NodeIndex v = 0; v < n; ++v) {
    ++size[label[v]];
    NodeIndex& best = min_id_node[label[v]];
    if (best == kUnvisited || g.document(v).id < g.document(best).id) best = v;
  }
  std::uint32_t giant = 0;
  for (std::uint32_t c = 1; c < count; ++c) {
    if (size[c] > size[giant] ||
        (size[c] == size[giant] && g.document(min_id_node[c]).id < g.document(min_id_node[giant]).id)) {
      giant = c;
    }
  }
  out.giant_component.reserve(size[giant]);
  for (NodeIndex v = 0; v < n; ++v) {
    if (label[v] == giant) out.giant_component.push_back(v);
  }
  out.gc_fraction = static_cast<double>(size[giant]) / static_cast<double>(n);
  return out;
}

PathMetrics path_metrics(const LegislationGraph& g, const PathOptions& options) {
  const ComponentReport report = components(g);
  return path_metrics(g, report.giant_component, options);
}

PathMetrics path_metrics(const LegislationGraph& g, std::span<const NodeIndex> component,
                         const PathOptions& options) {
  g.require_sealed("path_metrics");
  if (component.size() < 2) {
    throw ComputeError("structural-metrics", "giant component has fewer than two nodes");
  }
  PathMetrics out;
  out.component_size = component.size();
  out.directed = options.directed;
  NodeIndex smallest = component.front();
  for (NodeIndex v : component) {
    if (g.document(v).id < g.document(smallest).id) smallest = v;
  }
  out.restricted_to = g.document(smallest).id.str();

  std::vector<NodeIndex> sources(component.begin(), component.end());
  if (options.sample_sources > 0 && options.sample_sources < sources.size()) {
    Rng rng(derive_seed(options.seed, "path-sources"));
    for (std::size_t i = 0; i < options.sample_sources; ++i) {
      const std::size_t j = i + rng.below(sources.size() - i);
      std::swap(sources[i], sources[j]);
    }
    sources.resize(options.sample_sources);
    std::sort(sources.begin(), sources.end());
    out.sampled = true;
  }
  out.sources = sources.size();

  // Compact pull adjacency over the component: neighbors for the undirected
  // case, in-neighbors for the directed one.
  const SimpleProjection& p = g.projection();
  std::vector<std::uint32_t> local(g.node_count(), kUnvisited);
  for (std::size_t i = 0; i < component.size(); ++i) local[component[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::size_t> offsets(component.size() + 1, 0);
  std::vector<std::uint32_t> pull;
  for (std::size_t i = 0; i < component.size(); ++i) {
    const auto add = [&](NodeIndex u) {
      if (local[u] != kUnvisited) pull.push_back(local[u]);
    };
    if (options.directed) {
      for (NodeIndex u : g.in_neighbors(component[i])) add(u);
    } else {
      for (NodeIndex u : p.neighbors(component[i])) add(u);
    }
    offsets[i + 1] = pull.size();
  }
  std::vector<std::uint32_t> local_sources(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (local[sources[i]] == kUnvisited) throw ComputeError("structural-metrics", "path source outside component");
    local_sources[i] = local[sources[i]];
  }

  constexpr std::size_t kBlock = 64;
  const std::size_t blocks = (sources.size() + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> partial(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    const std::size_t first = b * kBlock;
    const std::size_t count = std::min(sources.size(), first + kBlock) - first;
    bfs_block(offsets, pull, std::span<const std::uint32_t>(local_sources).subspan(first, count), partial[b]);
  });

  std::vector<std::uint64_t> merged;
  for (const auto& hist : partial) {
    if (merged.size() < hist.size()) merged.resize(hist.size(), 0);
    for (std::size_t d = 0; d < hist.size(); ++d) merged[d] += hist[d];
  }
  std::uint64_t pairs = 0;
  long double weighted = 0;
  for (std::size_t d = 1; d < merged.size(); ++d) {
    if (merged[d] == 0) continue;
    out.distance_histogram[d] = merged[d];
    pairs += merged[d];
    weighted += static_cast<long double>(d) * merged[d];
    out.diameter = d;
  }
  out.average_path_length = pairs ? static_cast<double>(weighted / pairs) : 0.0;
  return out;
}

double assortativity(const LegislationGraph& g, AssortativityCriterion criterion) {
  const SimpleProjection& p = g.projection();
  if (p.edge_count() < 2) {
    throw ComputeError("structural-metrics", "assortativity needs at least two projection edges");
  }
  const std::size_t n = p.node_count();
  if (criterion == AssortativityCriterion::degree) {
    // Both orientations of each edge: x and y share one marginal.
    long double sum = 0, sum_sq = 0, sum_xy = 0, count = 0;
    for (NodeIndex u = 0; u < n; ++u) {
      const long double du = static_cast<long double>(p.degree(u));
      for (NodeIndex v : p.neighbors(u)) {
        const long double dv = static_cast<long double>(p.degree(v));
        sum += du;
        sum_sq += du * du;
        sum_xy += du * dv;
        count += 1;
      }
    }
    const long double mean = sum / count;
    const long double variance = sum_sq / count - mean * mean;
    if (!(variance > 1e-15L * (sum_sq / count))) {
      throw ComputeError("structural-metrics", "degree assortativity undefined: zero degree variance");
    }
    return static_cast<double>((sum_xy / count - mean * mean) / variance);
  }

  std::array<std::array<long double, kSectorCount>, kSectorCount> e{};
  long double total = 0;
  for (NodeIndex u = 0; u < n; ++u) {
    const std::size_t su = sector_slot(g.document(u).sector);
    for (NodeIndex v : p.neighbors(u)) {
      e[su][sector_slot(g.document(v).sector)] += 1;
      total += 1;
    }
  }
  long double trace = 0, ab = 0;
  for (std::size_t i = 0; i < kSectorCount; ++i) {
    long double a = 0, b = 0;
    for (std::size_t j = 0; j < kSectorCount; ++j) {
      a += e[i][j];
      b += e[j][i];
    }
    trace += e[i][i] / total;
    ab += (a / total) * (b / total);
  }
  if (1 - ab <= 1e-15L) {
    throw ComputeError("structural-metrics", "sector assortativity undefined: a single sector");
  }
  return static_cast<double>((trace - ab) / (1 - ab));
}

}  // namespace legnet
