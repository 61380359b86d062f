#include "legnet/bowtie.hpp"

#include <algorithm>
#include <limits>

#include "legnet/error.hpp"
#include "legnet/metrics.hpp"
#include "legnet/parallel.hpp"

namespace legnet {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Marks every node reachable from `seeds` via `next`, never entering nodes with blocked[v].
template <typename Next>
std::vector<bool> sweep(std::size_t n, const std::vector<NodeIndex>& seeds, const std::vector<bool>& blocked,
                        const Next& next) {
  std::vector<bool> seen(n, false);
  std::vector<NodeIndex> stack;
  for (NodeIndex s : seeds) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const NodeIndex v = stack.back();
    stack.pop_back();
    for (NodeIndex w : next(v)) {
      if (seen[w] || blocked[w]) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return seen;
}

}  // namespace

std::string_view region_name(BowTieRegion region) {
  switch (region) {
    case BowTieRegion::core:
      return "scc";
    case BowTieRegion::in:
      return "in";
    case BowTieRegion::out:
      return "out";
    case BowTieRegion::tubes:
      return "tubes";
    case BowTieRegion::tendrils:
      return "tendrils";
    case BowTieRegion::disconnected:
      return "disconnected";
  }
  return "?";
}

std::pair<std::vector<std::uint32_t>, std::uint32_t> strong_component_labels(const LegislationGraph& g) {
  g.require_sealed("strong_component_labels");
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> index(n, kNone), low(n, 0), label(n, kNone);
  std::vector<NodeIndex> stack;
  std::vector<bool> on_stack(n, false);
  struct Frame {
    NodeIndex v;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0, components = 0;

  for (NodeIndex root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto succ = g.out_neighbors(f.v);
      if (f.next < succ.size()) {
        const NodeIndex w = succ[f.next++];
        if (index[w] == kNone) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const NodeIndex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        NodeIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          label[w] = components;
        } while (w != v);
        ++components;
      }
    }
  }
  return {std::move(label), components};
}

std::vector<NodeIndex> largest_strong_component(const LegislationGraph& g) {
  const auto [label, count] = strong_component_labels(g);
  if (count == 0) return {};
  std::vector<std::size_t> size(count, 0);
  std::vector<NodeIndex> min_id(count, kNone);
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    ++size[label[v]];
    NodeIndex& best = min_id[label[v]];
    if (best == kNone || g.document(v).id < g.document(best).id) best = v;
  }
  std::uint32_t pick = 0;
  for (std::uint32_t c = 1; c < count; ++c) {
    if (size[c] > size[pick] ||
        (size[c] == size[pick] && g.document(min_id[c]).id < g.document(min_id[pick]).id)) {
      pick = c;
    }
  }
  std::vector<NodeIndex> core;
  core.reserve(size[pick]);
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (label[v] == pick) core.push_back(v);
  }
  return core;
}

BowTieDecomposition decompose(const LegislationGraph& g) {
  g.require_sealed("decompose");
  const std::size_t n = g.node_count();
  if (n == 0) throw ComputeError("bowtie", "cannot decompose an empty graph");

  const auto core = largest_strong_component(g);
  std::vector<bool> is_core(n, false);
  for (NodeIndex v : core) is_core[v] = true;
  const std::vector<bool> none(n, false);
  auto forward = [&](NodeIndex v) { return g.out_neighbors(v); };
  auto backward = [&](NodeIndex v) { return g.in_neighbors(v); };

  // Reachability from / to the core. Both sweeps seed at the core itself.
  std::vector<bool> from_core, to_core;
  parallel_for(2, [&](std::size_t which) {
    if (which == 0) {
      from_core = sweep(n, core, none, forward);
    } else {
      to_core = sweep(n, core, none, backward);
    }
  });

  BowTieDecomposition out;
  out.region.assign(n, BowTieRegion::disconnected);
  std::vector<NodeIndex> in_nodes, out_nodes;
  std::vector<bool> settled(n, false);
  for (NodeIndex v = 0; v < n; ++v) {
    if (is_core[v]) {
      out.region[v] = BowTieRegion::core;
    } else if (to_core[v]) {
      out.region[v] = BowTieRegion::in;
      in_nodes.push_back(v);
    } else if (from_core[v]) {
      out.region[v] = BowTieRegion::out;
      out_nodes.push_back(v);
    }
    settled[v] = is_core[v] || to_core[v] || from_core[v];
  }

  // Paths from IN and into OUT that avoid the core.
  std::vector<bool> from_in, to_out;
  parallel_for(2, [&](std::size_t which) {
    if (which == 0) {
      from_in = sweep(n, in_nodes, is_core, forward);
    } else {
      to_out = sweep(n, out_nodes, is_core, backward);
    }
  });
  for (NodeIndex v = 0; v < n; ++v) {
    if (settled[v]) continue;
    if (from_in[v] && to_out[v]) {
      out.region[v] = BowTieRegion::tubes;
    } else if (from_in[v] || to_out[v]) {
      out.region[v] = BowTieRegion::tendrils;
    }
  }

  for (NodeIndex v = 0; v < n; ++v) out.members[static_cast<std::size_t>(out.region[v])].push_back(v);
  for (std::size_t r = 0; r < out.members.size(); ++r) {
    out.fractions[r] = static_cast<double>(out.members[r].size()) / static_cast<double>(n);
  }
  return out;
}

std::vector<CoreGcPoint> core_gc_series(std::span<const std::pair<int, LegislationGraph>> series) {
  std::vector<CoreGcPoint> points(series.size());
  parallel_for(series.size(), [&](std::size_t i) {
    const auto& [year, g] = series[i];
    points[i] = {year, 0.0, 0.0};
    if (g.node_count() == 0) return;
    const double n = static_cast<double>(g.node_count());
    points[i].scc_fraction = static_cast<double>(largest_strong_component(g).size()) / n;
    points[i].gc_fraction = components(g).gc_fraction;
  });
  return points;
}

}  // namespace legnet
