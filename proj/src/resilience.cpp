#include "legnet/resilience.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "legnet/error.hpp"
#include "legnet/parallel.hpp"
#include "legnet/random.hpp"
#include "legnet/random_models.hpp"

namespace legnet {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), NodeIndex{0});
  }
  NodeIndex find(NodeIndex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  std::size_t unite(NodeIndex a, NodeIndex b) {
    a = find(a);
    b = find(b);
    if (a == b) return size_[a];
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return size_[a];
  }

 private:
  std::vector<NodeIndex> parent_;
  std::vector<std::size_t> size_;
};

// Giant-component sizes after removing order[0..r) for each r in schedule,
// computed by re-inserting nodes in reverse removal order.
std::vector<std::size_t> giant_sizes_static(const SimpleProjection& p, const std::vector<NodeIndex>& order,
                                            const std::vector<std::size_t>& schedule) {
  const std::size_t n = order.size();
  std::vector<std::size_t> sizes(schedule.size(), 0);
  std::vector<bool> present(n, false);
  DisjointSets sets(n);
  std::size_t giant = 0;
  std::size_t next = schedule.size();  // schedule is ascending; walk it backwards
  while (next > 0 && schedule[next - 1] >= n) sizes[--next] = 0;
  for (std::size_t pos = n; pos-- > 0;) {
    const NodeIndex v = order[pos];
    present[v] = true;
    giant = std::max<std::size_t>(giant, 1);
    for (NodeIndex w : p.neighbors(v)) {
      if (present[w]) giant = std::max(giant, sets.unite(v, w));
    }
    while (next > 0 && schedule[next - 1] == pos) sizes[--next] = giant;
  }
  return sizes;
}

std::size_t giant_size_alive(const SimpleProjection& p, const std::vector<bool>& alive) {
  const std::size_t n = alive.size();
  std::vector<bool> seen(n, false);
  std::vector<NodeIndex> queue;
  std::size_t best = 0;
  for (NodeIndex s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    seen[s] = true;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeIndex w : p.neighbors(queue[head])) {
        if (alive[w] && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    best = std::max(best, queue.size());
  }
  return best;
}

std::vector<std::size_t> giant_sizes_adaptive(const LegislationGraph& g, const std::vector<std::size_t>& schedule) {
  const std::size_t n = g.node_count();
  const SimpleProjection& p = g.projection();
  std::vector<std::size_t> degree(n);
  for (NodeIndex v = 0; v < n; ++v) degree[v] = g.degree(v, Direction::total);
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> sizes(schedule.size(), 0);
  std::vector<NodeIndex> candidates;
  std::size_t removed = 0;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const std::size_t goal = schedule[k];
    if (goal > removed) {
      candidates.clear();
      for (NodeIndex v = 0; v < n; ++v) {
        if (alive[v]) candidates.push_back(v);
      }
      const std::size_t take = goal - removed;
      std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take), candidates.end(),
                        [&](NodeIndex a, NodeIndex b) {
                          if (degree[a] != degree[b]) return degree[a] > degree[b];
                          return g.document(a).id < g.document(b).id;
                        });
      for (std::size_t i = 0; i < take; ++i) alive[candidates[i]] = false;
      for (std::size_t i = 0; i < take; ++i) {
        const NodeIndex v = candidates[i];
        for (NodeIndex w : g.out_neighbors(v)) {
          if (alive[w]) --degree[w];
        }
        for (NodeIndex w : g.in_neighbors(v)) {
          if (alive[w]) --degree[w];
        }
      }
      removed = goal;
    }
    sizes[k] = giant_size_alive(p, alive);
  }
  return sizes;
}

std::vector<NodeIndex> degree_order(const LegislationGraph& g) {
  std::vector<NodeIndex> order(g.node_count());
  std::iota(order.begin(), order.end(), NodeIndex{0});
  std::vector<std::size_t> degree(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) degree[v] = g.degree(v, Direction::total);
  std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return g.document(a).id < g.document(b).id;
  });
  return order;
}

}  // namespace

std::size_t ResilienceConfig::effective_repetitions() const {
  if (repetitions > 0) return repetitions;
  return strategy == AttackStrategy::random ? 1000 : 1;
}

void ResilienceConfig::validate() const {
  if (!(step_fraction > 0 && step_fraction < 1)) {
    throw ConfigError("resilience", "step_fraction must lie in (0, 1)");
  }
  if (!(stop_at > 0 && stop_at <= 1)) throw ConfigError("resilience", "stop_at must lie in (0, 1]");
}

double ResilienceCurve::area_under_curve() const {
  double area = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    area += (points[i].removed_fraction - points[i - 1].removed_fraction) *
            (points[i].gc_of_original + points[i - 1].gc_of_original) / 2;
  }
  return area;
}

std::vector<std::size_t> removal_schedule(std::size_t n, double step_fraction, double stop_at) {
  std::vector<std::size_t> schedule{0};
  std::size_t removed = 0;
  while (removed < n && static_cast<double>(removed) < stop_at * static_cast<double>(n)) {
    const double want = std::ceil(step_fraction * static_cast<double>(n - removed));
    removed += std::max<std::size_t>(1, static_cast<std::size_t>(want));
    removed = std::min(removed, n);
    schedule.push_back(removed);
  }
  return schedule;
}

ResilienceCurve simulate(const LegislationGraph& g, const ResilienceConfig& config) {
  config.validate();
  g.require_sealed("simulate");
  const std::size_t n = g.node_count();
  if (n < 20) throw ComputeError("resilience", "resilience simulation needs at least 20 nodes");

  const auto schedule = removal_schedule(n, config.step_fraction, config.stop_at);
  const SimpleProjection& p = g.projection();

  std::vector<std::vector<std::size_t>> runs;
  if (config.strategy == AttackStrategy::targeted) {
    runs.push_back(config.degree_mode == DegreeMode::adaptive ? giant_sizes_adaptive(g, schedule)
                                                              : giant_sizes_static(p, degree_order(g), schedule));
  } else {
    runs.resize(config.effective_repetitions());
    parallel_for(runs.size(), [&](std::size_t r) {
      Rng rng(derive_seed(config.seed, "resilience", r));
      std::vector<NodeIndex> order(n);
      std::iota(order.begin(), order.end(), NodeIndex{0});
      for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
      runs[r] = giant_sizes_static(p, order, schedule);
    });
  }

  ResilienceCurve curve;
  curve.averaged_over = runs.size();
  curve.points.resize(schedule.size());
  const double total = static_cast<double>(n);
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const double remaining = static_cast<double>(n - schedule[k]);
    double of_remaining = 0, of_original = 0;
    for (const auto& sizes : runs) {
      const double giant = static_cast<double>(sizes[k]);
      of_remaining += remaining > 0 ? giant / remaining : 0.0;
      of_original += giant / total;
    }
    curve.points[k] = {static_cast<double>(schedule[k]) / total, of_remaining / static_cast<double>(runs.size()),
                       of_original / static_cast<double>(runs.size())};
  }
  return curve;
}

std::pair<ResilienceCurve, ResilienceCurve> compare_with_null(const LegislationGraph& g,
                                                              const ResilienceConfig& config) {
  config.validate();
  g.require_sealed("compare_with_null");
  const LegislationGraph null = erdos_renyi(g.node_count(), g.edge_count(), derive_seed(config.seed, "resilience-null"));
  return {simulate(g, config), simulate(null, config)};
}

}  // namespace legnet
