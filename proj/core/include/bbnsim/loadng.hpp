#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "bbnsim/link_estimation.hpp"
#include "bbnsim/route.hpp"

namespace bbnsim {

struct LoadngParams {
  int rht_ms = 500;               // route hold time
  double weight_offset_db = 40.0; // gain-to-distance proxy offset
};

/// Distance proxy for reactive discovery: max(0, -mean_gain_db - offset),
/// a monotone-decreasing map from link gain to edge weight that keeps
/// strong links near zero cost.
double loadng_edge_weight(const LinkStats& stats, double weight_offset_db);

/// Minimum-cost path under the distance proxy, no hop limit. Nullopt when
/// the destination is unreachable (delivery failure for the caller).
std::optional<Route> discover_route(NodeId s, NodeId d, const LinkGraph& graph,
                                    double weight_offset_db = 40.0);

/// Reactive route cache with hold-time expiry and repair on broken links.
/// Mutated sequentially along the window timeline.
class ReactiveRouteCache {
 public:
  explicit ReactiveRouteCache(LoadngParams params = {}) : params_(params) {}

  /// Serve the cached route when it is younger than the hold time and all
  /// of its hop edges still exist; rediscover and cache otherwise.
  std::optional<Route> serve_or_repair(NodeId s, NodeId d, std::int64_t now_ms,
                                       const LinkGraph& graph);

  /// Report a lost packet on the flow; the entry is dropped so the next
  /// call rediscovers.
  void report_failure(NodeId s, NodeId d);

  const LoadngParams& params() const { return params_; }

 private:
  struct Entry {
    Route route;
    std::int64_t established_at_ms = 0;
  };

  LoadngParams params_;
  std::map<std::pair<NodeId, NodeId>, Entry> entries_;
};

}  // namespace bbnsim
