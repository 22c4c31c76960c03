#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bbnsim/link_estimation.hpp"
#include "bbnsim/route.hpp"
#include "bbnsim/trace.hpp"

namespace bbnsim {

/// One hub-to-hub hop of a cooperative path, with the transmitting-side
/// BAN's on-body sensors available as decode-and-forward relay branches.
struct RouteHop {
  NodeId src_hub = 0;
  NodeId dst_hub = 0;
  std::vector<NodeId> relays;  // up to two

  friend bool operator==(const RouteHop&, const RouteHop&) = default;
};

/// The two cooperative paths of one flow. p1 comes from hop-limited
/// shortest-path routing; p2, when available, avoids p1's intermediate hub.
struct CmrPlan {
  std::vector<RouteHop> p1;  // one or two route-hops
  double p1_cost = 0.0;
  bool p1_fallback = false;
  std::optional<std::vector<RouteHop>> p2;
  double p2_cost = 0.0;
};

/// 3-branch selection combining at one route-hop: the best of the direct
/// link and of each relayed branch, where a relayed branch is limited by
/// its weaker link-hop. Branches with an unobserved link-hop are skipped;
/// a missing direct gain throws IncompleteObservationError.
double selection_combine(const RouteHop& hop, const GainSource& gains);
double selection_combine(const RouteHop& hop, const std::map<LinkId, double>& gains);

CmrPlan plan_routes(NodeId s, NodeId d, const LinkGraph& graph, const Network& network);

struct CmrDelivery {
  bool success = false;
  /// Combined value of the path accounted against (Eq-style min over its
  /// route-hop combiner outputs), normalized back to a source-referenced
  /// channel gain.
  double combined_gain_db = 0.0;
  double p1_gain_db = 0.0;
  std::optional<double> p2_gain_db;
  RouteKind kind = RouteKind::Primary;
  bool retransmitted = false;
  std::vector<RouteHop> path;  // structure billed for delay/energy
};

/// Attempt a delivery over the plan: combine per route-hop, take the path
/// minimum, test received power against the sensitivity. p2 is tried when
/// p1 fails; a single-route-hop p1 with no alternate path earns one
/// retransmission, recomputed on the same instant (the channel is coherent
/// across it, so the repeat resolves identically).
CmrDelivery cmr_deliver(const CmrPlan& plan, const GainSource& gains,
                        double sensitivity_dbm, const Network& network);
CmrDelivery cmr_deliver(const CmrPlan& plan, const std::map<LinkId, double>& gains,
                        double sensitivity_dbm, const Network& network);

}  // namespace bbnsim
