#pragma once

#include <utility>
#include <vector>

#include "legnet/graph.hpp"

namespace legnet {

/// Documents of one sector and the references among them.
LegislationGraph filter_sector(const LegislationGraph& g, Sector sector);

/// Every document, only references of one kind.
LegislationGraph filter_reftype(const LegislationGraph& g, RefType kind);

/// Point-in-time view: documents with effect <= at <= expiry, and the
/// references whose endpoints are both in force.
LegislationGraph snapshot(const LegislationGraph& g, Date at);

/// One snapshot per year, taken on December 31, ascending. Empty when
/// first_year > last_year.
std::vector<std::pair<int, LegislationGraph>> annual_series(const LegislationGraph& g,
                                                            int first_year, int last_year);

/// Named sub-networks: LN (everything), RN (sector Legislation), ICN
/// (instruments_cited edges), LBN (legal_basis edges).
enum class Network { ln, rn, icn, lbn };
inline constexpr Network kAllNetworks[] = {Network::ln, Network::rn, Network::icn, Network::lbn};

const char* network_name(Network network);
std::optional<Network> network_from_name(std::string_view name);
LegislationGraph select_network(const LegislationGraph& g, Network network);

}  // namespace legnet
