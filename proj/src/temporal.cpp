#include "legnet/temporal.hpp"

#include <algorithm>
#include <cmath>

#include "legnet/bowtie.hpp"
#include "legnet/error.hpp"
#include "legnet/filters.hpp"
#include "legnet/metrics.hpp"
#include "legnet/parallel.hpp"

namespace legnet {

SnapshotStat snapshot_stat(const LegislationGraph& g) {
  SnapshotStat stat;
  stat.nodes = g.node_count();
  stat.edges = g.edge_count();
  for (const LegalDocument& doc : g.documents()) ++stat.per_sector[sector_slot(doc.sector)];
  for (const Edge& e : g.edges()) ++stat.per_reftype[reftype_slot(e.kind)];
  if (stat.nodes > 0) {
    stat.scc_fraction =
        static_cast<double>(largest_strong_component(g).size()) / static_cast<double>(stat.nodes);
    stat.gc_fraction = components(g).gc_fraction;
  }
  return stat;
}

std::vector<SnapshotStat> evolution_series(const LegislationGraph& g, int first_year, int last_year) {
  g.require_sealed("evolution_series");
  if (first_year > last_year) return {};
  std::vector<SnapshotStat> series(static_cast<std::size_t>(last_year - first_year + 1));
  parallel_for(series.size(), [&](std::size_t i) {
    const int year = first_year + static_cast<int>(i);
    series[i] = snapshot_stat(snapshot(g, Date(year, 12, 31)));
    series[i].year = year;
  });
  return series;
}

DensificationFit densification_fit(std::span<const SnapshotStat> series) {
  std::vector<double> xs, ys;
  DensificationFit fit;
  for (const SnapshotStat& s : series) {
    if (s.nodes < 2 || s.edges < 1) {
      ++fit.points_excluded;
      continue;
    }
    xs.push_back(std::log(static_cast<double>(s.nodes)));
    ys.push_back(std::log(static_cast<double>(s.edges)));
  }
  fit.points_used = xs.size();
  if (xs.size() < 3) {
    throw ComputeError("temporal-analysis", "densification fit needs at least 3 usable snapshots, got " +
                                                std::to_string(xs.size()));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx <= 0) throw ComputeError("temporal-analysis", "node counts do not vary; slope undefined");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return fit;
}

}  // namespace legnet
