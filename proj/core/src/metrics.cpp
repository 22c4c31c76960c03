#include "bbnsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "bbnsim/errors.hpp"

namespace bbnsim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void validate(const EnergyParams& p) {
  if (p.t_packet_ms <= 0 || p.p_tx_hub_mw <= 0 || p.p_rx_hub_mw <= 0 ||
      p.p_tx_sensor_mw <= 0 || p.p_rx_sensor_mw <= 0 || p.p_idle_mw <= 0)
    throw Error("energy parameters must be strictly positive");
}

void validate(const DelayParams& p) {
  if (p.queue_wait_hub_ms <= 0 || p.queue_wait_cmr_hop_ms < p.queue_wait_hub_ms)
    throw Error("queue waits must be positive with the cooperative wait at least as long");
}

double hub_hop_energy(const EnergyParams& p) {
  return p.t_packet_ms * (p.p_tx_hub_mw + p.p_rx_hub_mw) / 1000.0;  // ms*mW -> mJ
}

double relay_branch_energy(const EnergyParams& p) {
  const double hub_to_sensor = p.t_packet_ms * (p.p_tx_hub_mw + p.p_rx_sensor_mw);
  const double sensor_to_hub = p.t_packet_ms * (p.p_tx_sensor_mw + p.p_rx_hub_mw);
  return (hub_to_sensor + sensor_to_hub) / 1000.0;
}

/// Received power of a single-path route at one instant: the weakest hop.
/// Links without an observation count at the sentinel gain.
double route_received_power(const Route& route, const GainSource& gains,
                            const Network& network) {
  double combined = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < route.hops.size(); ++i) {
    const NodeId tx = route.hops[i];
    const double gain = gains.at(tx, route.hops[i + 1]).value_or(kSentinelGainDb);
    combined = std::min(combined, gain + network.tx_power_dbm(tx));
  }
  return combined;
}

}  // namespace

double delay_of(const RouteShape& shape, const DelayParams& params, double t_packet_ms) {
  if (shape.hops < 1) throw Error("route shape needs at least one hop");
  const double wait =
      shape.cooperative ? params.queue_wait_cmr_hop_ms : params.queue_wait_hub_ms;
  double delay = shape.hops * t_packet_ms + (shape.hops - 1) * wait;
  if (shape.retransmitted) delay *= 2.0;
  return delay;
}

double energy_of(const RouteShape& shape, const EnergyParams& params,
                 double idle_ms_per_intermediate) {
  if (shape.hops < 1) throw Error("route shape needs at least one hop");
  double transmit = shape.hops * hub_hop_energy(params);
  if (shape.cooperative) {
    for (std::size_t h = 0; h < static_cast<std::size_t>(shape.hops); ++h) {
      const int branches =
          h < shape.relays_per_hop.size() ? shape.relays_per_hop[h] : 0;
      transmit += branches * relay_branch_energy(params);
    }
  }
  if (shape.retransmitted) transmit *= 2.0;  // idle terms are not repeated
  const double idle =
      (shape.hops - 1) * idle_ms_per_intermediate * params.p_idle_mw / 1000.0;
  return transmit + idle;
}

NodeId auto_orpl_root(const LinkGraph& graph) {
  NodeId best = graph.nodes.empty() ? 0 : graph.nodes.front();
  double best_mean = -1.0;
  for (NodeId hub : graph.nodes) {
    double sum = 0.0;
    for (NodeId other : graph.nodes) {
      if (other == hub) continue;
      const LinkStats* e = graph.edge(hub, other);
      sum += e ? e->prr : 0.0;
    }
    const double mean = graph.nodes.size() > 1
                            ? sum / static_cast<double>(graph.nodes.size() - 1)
                            : 0.0;
    if (mean > best_mean) {
      best_mean = mean;
      best = hub;
    }
  }
  return best;
}

std::vector<PacketOutcome> run_protocol(const ChannelTrace& trace, const ProtocolRun& run,
                                        const std::vector<std::pair<NodeId, NodeId>>& flows,
                                        const RunParams& params) {
  const std::vector<TimestampWindow> windows = window(trace, params.window_period_ms);
  if (windows.empty()) throw EmptyTraceError("trace has no windows");
  validate(params.energy);
  validate(params.delay);
  const Network& network = trace.network;
  for (const auto& [s, d] : flows) {
    if (!network.is_hub(s) || !network.is_hub(d))
      throw SchemaError("flows must connect hubs");
    if (s == d) throw SchemaError("flow source equals destination");
  }

  std::vector<PacketOutcome> outcomes;
  outcomes.reserve(windows.size() * flows.size());

  // ORPL state: one trickle-driven table for the network.
  std::optional<TrickleTimer> trickle;
  std::optional<EdcTable> edc_table;
  std::optional<NodeId> orpl_root = params.orpl_root;
  if (run.protocol == Protocol::Orpl)
    trickle.emplace(params.trickle, params.window_period_ms, params.trickle_seed);

  ReactiveRouteCache loadng_cache(params.loadng);

  for (const TimestampWindow& win : windows) {
    // Routing table for window n comes from window n-1; window 0 warms up
    // on its own samples.
    const TimestampWindow& basis = win.index > 0 ? windows[win.index - 1] : win;
    const LinkGraph graph = build_graph(basis, network, params.sensitivity_dbm);

    if (run.protocol == Protocol::Orpl) {
      const bool refresh = trickle->advance();
      if (!orpl_root) orpl_root = auto_orpl_root(graph);
      if (refresh || !edc_table)
        edc_table = compute_edc(graph, *orpl_root, params.orpl_omega);
    }

    // Window-scoped routes for table-driven protocols.
    std::map<std::pair<NodeId, NodeId>, Route> routes;
    std::map<std::pair<NodeId, NodeId>, CmrPlan> plans;
    std::map<std::pair<NodeId, NodeId>, bool> no_route;
    for (const auto& flow : flows) {
      switch (run.protocol) {
        case Protocol::Spr:
          routes[flow] = shortest_path(graph, flow.first, flow.second, run.spr_hop_limit);
          break;
        case Protocol::Cmr:
          plans.emplace(flow, plan_routes(flow.first, flow.second, graph, network));
          break;
        case Protocol::Orpl: {
          auto route = orpl_route(flow.first, flow.second, *edc_table, graph);
          if (route)
            routes[flow] = *route;
          else
            no_route[flow] = true;
          break;
        }
        case Protocol::Loadng:
          break;  // reactive: resolved per packet below
      }
    }

    const std::size_t slot_count = static_cast<std::size_t>(std::max<std::int64_t>(
        1, std::min<std::int64_t>(win.period_ms,
                                  trace.duration_ms - win.start_ms) /
               win.sampling_period_ms));
    const std::size_t slots =
        params.instant == DeliveryInstant::EverySample ? slot_count : 1;

    for (std::size_t slot = 0; slot < slots; ++slot) {
      const std::int64_t now_ms = win.start_ms + slot * win.sampling_period_ms;
      const WindowSlotSource gains(win, slot);

      for (const auto& flow : flows) {
        PacketOutcome outcome;
        outcome.window_index = win.index;
        outcome.time_ms = now_ms;
        outcome.s = flow.first;
        outcome.d = flow.second;

        if (run.protocol == Protocol::Cmr) {
          const CmrPlan& plan = plans.at(flow);
          const CmrDelivery delivery =
              cmr_deliver(plan, gains, params.sensitivity_dbm, network);
          outcome.success = delivery.success;
          outcome.combined_gain_db = delivery.combined_gain_db;
          outcome.retransmitted = delivery.retransmitted;
          outcome.route_kind =
              plan.p1_fallback && delivery.kind == RouteKind::Primary
                  ? RouteKind::DirectFallback
                  : delivery.kind;
          outcome.hop_count = static_cast<int>(delivery.path.size());
          RouteShape shape;
          shape.cooperative = true;
          shape.hops = outcome.hop_count;
          for (const RouteHop& hop : delivery.path)
            shape.relays_per_hop.push_back(static_cast<int>(hop.relays.size()));
          shape.retransmitted = delivery.retransmitted;
          outcome.delay_ms = delay_of(shape, params.delay, params.energy.t_packet_ms);
          outcome.energy_mj =
              energy_of(shape, params.energy, params.delay.queue_wait_cmr_hop_ms);
          outcomes.push_back(std::move(outcome));
          continue;
        }

        const Route* route = nullptr;
        std::optional<Route> reactive;
        if (run.protocol == Protocol::Loadng) {
          reactive = loadng_cache.serve_or_repair(flow.first, flow.second, now_ms, graph);
          if (reactive) route = &*reactive;
        } else if (!no_route.count(flow)) {
          route = &routes.at(flow);
        }

        if (!route) {
          outcome.success = false;
          outcome.combined_gain_db = kNaN;
          outcome.route_kind = RouteKind::NoRoute;
          outcome.hop_count = 0;
          outcomes.push_back(std::move(outcome));
          continue;
        }

        const double rx = route_received_power(*route, gains, network);
        outcome.success = rx >= params.sensitivity_dbm;
        outcome.combined_gain_db = rx - network.tx_power_dbm(flow.first);
        outcome.hop_count = route->hop_count;
        outcome.route_kind =
            route->fallback ? RouteKind::DirectFallback : RouteKind::Primary;
        if (!outcome.success) {
          // One retransmission on the same instant; the channel is coherent
          // across it, so the repeat resolves identically.
          outcome.retransmitted = true;
          if (run.protocol == Protocol::Loadng)
            loadng_cache.report_failure(flow.first, flow.second);
        }
        RouteShape shape{false, route->hop_count, {}, outcome.retransmitted};
        outcome.delay_ms = delay_of(shape, params.delay, params.energy.t_packet_ms);
        outcome.energy_mj =
            energy_of(shape, params.energy, params.delay.queue_wait_hub_ms);
        outcomes.push_back(std::move(outcome));
      }
    }
  }
  return outcomes;
}

std::vector<std::pair<double, double>> outage_curve(const std::vector<double>& combined_gains_db,
                                                    double tx_power_dbm,
                                                    const std::vector<double>& grid_dbm) {
  if (grid_dbm.empty()) throw Error("sensitivity grid is empty");
  if (combined_gains_db.empty()) throw Error("no combined gains to evaluate");
  std::vector<double> rx(combined_gains_db.size());
  for (std::size_t i = 0; i < rx.size(); ++i) rx[i] = combined_gains_db[i] + tx_power_dbm;
  std::sort(rx.begin(), rx.end());

  std::vector<std::pair<double, double>> curve;
  curve.reserve(grid_dbm.size());
  for (double threshold : grid_dbm) {
    const auto below = std::lower_bound(rx.begin(), rx.end(), threshold) - rx.begin();
    curve.emplace_back(threshold,
                       static_cast<double>(below) / static_cast<double>(rx.size()));
  }
  return curve;
}

MetricsSummary summarize(const std::vector<PacketOutcome>& outcomes,
                         const std::vector<double>& grid_dbm, double tx_power_dbm,
                         int window_period_ms) {
  if (outcomes.empty()) throw Error("no outcomes to summarize");

  MetricsSummary summary;
  summary.n_outcomes = outcomes.size();

  std::set<std::pair<NodeId, NodeId>> flows;
  int max_window = 0;
  std::size_t successes = 0, retransmits = 0, no_routes = 0;
  std::vector<double> attempted_gains;
  double delay_sum = 0.0, energy_sum = 0.0;
  std::size_t attempted = 0;
  std::map<int, std::size_t> hop_counts;

  for (const PacketOutcome& o : outcomes) {
    flows.insert({o.s, o.d});
    max_window = std::max(max_window, o.window_index);
    if (o.success) ++successes;
    if (o.retransmitted) ++retransmits;
    if (o.route_kind == RouteKind::NoRoute) {
      ++no_routes;
      continue;
    }
    ++attempted;
    attempted_gains.push_back(o.combined_gain_db);
    delay_sum += o.delay_ms;
    energy_sum += o.energy_mj;
    summary.delay_max_ms = std::max(summary.delay_max_ms, o.delay_ms);
    summary.energy_max_mj = std::max(summary.energy_max_mj, o.energy_mj);
    ++hop_counts[o.hop_count];
  }

  summary.n_flows = static_cast<int>(flows.size());
  summary.n_windows = max_window + 1;
  summary.success_rate =
      static_cast<double>(successes) / static_cast<double>(outcomes.size());
  summary.retransmit_fraction =
      static_cast<double>(retransmits) / static_cast<double>(outcomes.size());
  summary.no_route_fraction =
      static_cast<double>(no_routes) / static_cast<double>(outcomes.size());

  const double duration_s =
      static_cast<double>(summary.n_windows) * window_period_ms / 1000.0;
  summary.throughput_pps =
      static_cast<double>(successes) / (duration_s * summary.n_flows);

  if (attempted > 0) {
    summary.delay_avg_ms = delay_sum / static_cast<double>(attempted);
    summary.energy_avg_mj = energy_sum / static_cast<double>(attempted);
    summary.outage_curve = outage_curve(attempted_gains, tx_power_dbm, grid_dbm);
  }
  for (const auto& [hops, count] : hop_counts)
    summary.hop_histogram[hops] =
        static_cast<double>(count) / static_cast<double>(outcomes.size());
  return summary;
}

}  // namespace bbnsim
