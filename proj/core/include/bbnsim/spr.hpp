#pragma once

#include <map>
#include <optional>

#include "bbnsim/link_estimation.hpp"
#include "bbnsim/route.hpp"
#include "bbnsim/trace.hpp"

namespace bbnsim {

/// Minimum-ETX-sum simple path between hubs. With a hop limit the search is
/// restricted to paths of at most that many hops; when no finite-cost route
/// satisfies the limit (or the destination is unreachable) the direct
/// one-hop route is returned regardless of edge presence, flagged as
/// fallback. Ties break on fewer hops, then on the lexicographically
/// smallest hop sequence.
Route shortest_path(const LinkGraph& graph, NodeId s, NodeId d,
                    std::optional<int> hop_limit = std::nullopt);

/// Combined channel gain of a delivered route: the minimum over its hop
/// gains. Throws IncompleteObservationError when a hop gain is missing.
double spr_combined_gain(const Route& route, const GainSource& gains);
double spr_combined_gain(const Route& route, const std::map<LinkId, double>& gains);

}  // namespace bbnsim
