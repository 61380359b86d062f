#include "legnet/filters.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "legnet/parallel.hpp"

namespace legnet {

LegislationGraph filter_sector(const LegislationGraph& g, Sector sector) {
  g.require_sealed("filter_sector");
  std::vector<bool> keep(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) keep[v] = g.document(v).sector == sector;
  return g.subgraph(keep, [](const Edge&) { return true; });
}

LegislationGraph filter_reftype(const LegislationGraph& g, RefType kind) {
  g.require_sealed("filter_reftype");
  return g.subgraph(std::vector<bool>(g.node_count(), true),
                    [kind](const Edge& e) { return e.kind == kind; });
}

LegislationGraph snapshot(const LegislationGraph& g, Date at) {
  g.require_sealed("snapshot");
  std::vector<bool> keep(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const LegalDocument& doc = g.document(v);
    keep[v] = doc.effect <= at && at <= doc.expiry;
  }
  return g.subgraph(keep, [](const Edge&) { return true; });
}

std::vector<std::pair<int, LegislationGraph>> annual_series(const LegislationGraph& g,
                                                            int first_year, int last_year) {
  g.require_sealed("annual_series");
  std::vector<std::pair<int, LegislationGraph>> series;
  if (first_year > last_year) return series;
  series.resize(static_cast<std::size_t>(last_year - first_year + 1));
  parallel_for(series.size(), [&](std::size_t i) {
    const int year = first_year + static_cast<int>(i);
    series[i] = {year, snapshot(g, Date(year, 12, 31))};
  });
  return series;
}

const char* network_name(Network network) {
  switch (network) {
    case Network::ln:
      return "LN";
    case Network::rn:
      return "RN";
    case Network::icn:
      return "ICN";
    case Network::lbn:
      return "LBN";
  }
  return "?";
}

std::optional<Network> network_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (Network n : kAllNetworks) {
    if (upper == network_name(n)) return n;
  }
  return std::nullopt;
}

LegislationGraph select_network(const LegislationGraph& g, Network network) {
  switch (network) {
    case Network::rn:
      return filter_sector(g, Sector::legislation);
    case Network::icn:
      return filter_reftype(g, RefType::instruments_cited);
    case Network::lbn:
      return filter_reftype(g, RefType::legal_basis);
    case Network::ln:
      break;
  }
  return g.subgraph(std::vector<bool>(g.node_count(), true), [](const Edge&) { return true; });
}

}  // namespace legnet
