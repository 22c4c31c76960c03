#include "bbnsim/cmr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bbnsim/errors.hpp"
#include "bbnsim/spr.hpp"
#include "path_search.hpp"

namespace bbnsim {

namespace {

// Eq.-style combiner: max of direct and of each min-limited relayed branch.
// `fill_direct` substitutes the sentinel when the direct link was never
// observed (delivery context); the public operation keeps the throwing
// contract instead.
double combine(const RouteHop& hop, const GainSource& gains,
               std::optional<double> fill_direct) {
  auto direct = gains.at(hop.src_hub, hop.dst_hub);
  if (!direct) {
    if (!fill_direct)
      throw IncompleteObservationError("no direct gain for route-hop " +
                                       std::to_string(hop.src_hub) + "->" +
                                       std::to_string(hop.dst_hub));
    direct = fill_direct;
  }
  double best = *direct;
  for (NodeId relay : hop.relays) {
    auto up = gains.at(hop.src_hub, relay);
    auto down = gains.at(relay, hop.dst_hub);
    if (!up || !down) continue;  // never-observed branch was never an input
    best = std::max(best, std::min(*up, *down));
  }
  return best;
}

std::vector<RouteHop> to_route_hops(const std::vector<NodeId>& hops,
                                    const Network& network) {
  std::vector<RouteHop> out;
  for (std::size_t i = 0; i + 1 < hops.size(); ++i)
    out.push_back(RouteHop{hops[i], hops[i + 1], network.sensors_of_ban(hops[i])});
  return out;
}

double path_combined(const std::vector<RouteHop>& path, const GainSource& gains,
                     const Network& network) {
  double combined = std::numeric_limits<double>::infinity();
  for (const RouteHop& hop : path) {
    const double fill = kSentinelGainDb + network.tx_power_dbm(hop.src_hub);
    combined = std::min(combined, combine(hop, gains, fill));
  }
  return combined;
}

}  // namespace

double selection_combine(const RouteHop& hop, const GainSource& gains) {
  return combine(hop, gains, std::nullopt);
}

double selection_combine(const RouteHop& hop, const std::map<LinkId, double>& gains) {
  MapGainSource source(gains);
  return selection_combine(hop, source);
}

CmrPlan plan_routes(NodeId s, NodeId d, const LinkGraph& graph, const Network& network) {
  Route primary = shortest_path(graph, s, d, 2);

  CmrPlan plan;
  plan.p1 = to_route_hops(primary.hops, network);
  plan.p1_cost = primary.cost;
  plan.p1_fallback = primary.fallback;

  // Second path: best hop-limited route that avoids p1's intermediate hub.
  std::optional<NodeId> used_intermediate;
  if (primary.hops.size() == 3) used_intermediate = primary.hops[1];

  std::optional<detail::PathLabel> best;
  auto consider = [&best](detail::PathLabel cand) {
    if (!best || detail::label_less(cand, *best)) best = std::move(cand);
  };
  if (used_intermediate) {
    if (const LinkStats* e = graph.edge(s, d); e && std::isfinite(e->etx))
      consider(detail::PathLabel{e->etx, {s, d}});
  }
  for (NodeId r : graph.nodes) {
    if (r == s || r == d) continue;
    if (used_intermediate && r == *used_intermediate) continue;
    const LinkStats* up = graph.edge(s, r);
    const LinkStats* down = graph.edge(r, d);
    if (!up || !down || !std::isfinite(up->etx) || !std::isfinite(down->etx)) continue;
    consider(detail::PathLabel{up->etx + down->etx, {s, r, d}});
  }
  if (best) {
    plan.p2 = to_route_hops(best->hops, network);
    plan.p2_cost = best->cost;
  }
  return plan;
}

CmrDelivery cmr_deliver(const CmrPlan& plan, const GainSource& gains,
                        double sensitivity_dbm, const Network& network) {
  const ReceivedPowerSource rx(gains, network);
  const NodeId source_hub = plan.p1.front().src_hub;
  const double source_power = network.tx_power_dbm(source_hub);

  CmrDelivery out;
  const double p1_rx = path_combined(plan.p1, rx, network);
  out.p1_gain_db = p1_rx - source_power;

  double p2_rx = -std::numeric_limits<double>::infinity();
  if (plan.p2) {
    p2_rx = path_combined(*plan.p2, rx, network);
    out.p2_gain_db = p2_rx - source_power;
  }

  if (p1_rx >= sensitivity_dbm) {
    out.success = true;
    out.kind = RouteKind::Primary;
    out.combined_gain_db = out.p1_gain_db;
    out.path = plan.p1;
    return out;
  }
  if (plan.p2) {
    // The destination processes whichever copy it can decode; the combined
    // output on a primary failure is the alternate path's, decodable or not.
    out.success = p2_rx >= sensitivity_dbm;
    out.kind = RouteKind::Alternate;
    out.combined_gain_db = *out.p2_gain_db;
    out.path = *plan.p2;
    return out;
  }
  // No alternate path: a single-route-hop shortest path earns one
  // retransmission, recomputed on the same instant.
  out.kind = RouteKind::Primary;
  out.path = plan.p1;
  if (plan.p1.size() == 1) {
    out.retransmitted = true;
    const double retry_rx = path_combined(plan.p1, rx, network);
    out.success = retry_rx >= sensitivity_dbm;
    out.combined_gain_db = retry_rx - source_power;
  } else {
    out.success = false;
    out.combined_gain_db = out.p1_gain_db;
  }
  return out;
}

CmrDelivery cmr_deliver(const CmrPlan& plan, const std::map<LinkId, double>& gains,
                        double sensitivity_dbm, const Network& network) {
  MapGainSource source(gains);
  return cmr_deliver(plan, source, sensitivity_dbm, network);
}

}  // namespace bbnsim
