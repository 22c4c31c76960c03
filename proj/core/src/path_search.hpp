#pragma once

// Internal tie-broken path search shared by the routing modules.
// Order on candidate paths: total cost, then hop count, then the
// lexicographically smallest hop sequence.

#include <functional>
#include <optional>
#include <vector>

#include "bbnsim/link_estimation.hpp"
#include "bbnsim/network.hpp"

namespace bbnsim::detail {

struct PathLabel {
  double cost = 0.0;
  std::vector<NodeId> hops;
};

bool label_less(const PathLabel& a, const PathLabel& b);

using EdgeWeight = std::function<std::optional<double>(NodeId, NodeId)>;

/// Minimum-cost simple path by Dijkstra with the tie-broken label order.
std::optional<PathLabel> dijkstra(const std::vector<NodeId>& nodes, const EdgeWeight& weight,
                                  NodeId s, NodeId d);

/// Minimum-cost path over at most `max_hops` edges (label-correcting rounds).
std::optional<PathLabel> bounded_search(const std::vector<NodeId>& nodes,
                                        const EdgeWeight& weight, NodeId s, NodeId d,
                                        int max_hops);

/// ETX weight of a graph edge, or nullopt when absent.
EdgeWeight etx_weight(const LinkGraph& graph);

}  // namespace bbnsim::detail
