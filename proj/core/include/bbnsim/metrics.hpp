#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bbnsim/cmr.hpp"
#include "bbnsim/loadng.hpp"
#include "bbnsim/orpl.hpp"
#include "bbnsim/route.hpp"
#include "bbnsim/spr.hpp"
#include "bbnsim/trace.hpp"

namespace bbnsim {

struct EnergyParams {
  double t_packet_ms = 0.6;
  double p_tx_hub_mw = 6.0;
  double p_rx_hub_mw = 6.0;
  double p_tx_sensor_mw = 5.0;
  double p_rx_sensor_mw = 5.0;
  double p_idle_mw = 1.0;
};

struct DelayParams {
  double queue_wait_hub_ms = 49.0;      // waiting at an intermediate hub
  double queue_wait_cmr_hop_ms = 59.0;  // extra room for the relayed links
  int sampling_period_ms = 50;
};

/// Shape of a delivery for the delay/energy arithmetic: hub-level hop count
/// plus, for cooperative paths, the relay branch count per route-hop.
struct RouteShape {
  bool cooperative = false;
  int hops = 1;
  std::vector<int> relays_per_hop;  // cooperative paths only
  bool retransmitted = false;
};

/// End-to-end delay: per-hop transmission time plus queuing at each
/// intermediate hub (49 ms, or 59 ms per cooperative route-hop).
/// Retransmission doubles the total.
double delay_of(const RouteShape& shape, const DelayParams& params, double t_packet_ms);

/// Energy per packet: per-hop transmit+receive energy with role-appropriate
/// powers, relayed branch link-hops for cooperative route-hops, plus idle
/// energy at each intermediate hub. Retransmission doubles the transmission
/// terms only.
double energy_of(const RouteShape& shape, const EnergyParams& params,
                 double idle_ms_per_intermediate);

struct PacketOutcome {
  int window_index = 0;
  std::int64_t time_ms = 0;
  NodeId s = 0;
  NodeId d = 0;
  bool success = false;
  double combined_gain_db = 0.0;  // NaN for no-route outcomes
  double delay_ms = 0.0;
  double energy_mj = 0.0;
  int hop_count = 0;
  bool retransmitted = false;
  RouteKind route_kind = RouteKind::Primary;
};

/// When a packet is evaluated inside each window.
enum class DeliveryInstant {
  EverySample,  // every 50 ms slot carries a packet (20 Hz, the default)
  WindowStart,  // one packet per window at the first slot
};

/// Protocol selector; SPR carries its hop limit (nullopt = unrestricted).
struct ProtocolRun {
  Protocol protocol = Protocol::Spr;
  std::optional<int> spr_hop_limit = 2;
};

struct RunParams {
  double sensitivity_dbm = -100.0;
  int window_period_ms = kDefaultWindowPeriodMs;
  DeliveryInstant instant = DeliveryInstant::EverySample;
  EnergyParams energy;
  DelayParams delay;
  // ORPL
  std::optional<NodeId> orpl_root;  // nullopt = highest mean PRR over window 0
  double orpl_omega = 0.1;
  TrickleConfig trickle;
  std::uint64_t trickle_seed = 1;
  // LOADng
  LoadngParams loadng;
};

/// Trace-driven evaluation of one protocol: for each window the routing
/// table is built from the previous window's samples (window 0 warms up on
/// itself) and deliveries are evaluated against the current window's gains.
/// Failed deliveries of non-CMR protocols are retransmitted once on the
/// same instant; CMR follows its own retransmission rule.
std::vector<PacketOutcome> run_protocol(const ChannelTrace& trace, const ProtocolRun& run,
                                        const std::vector<std::pair<NodeId, NodeId>>& flows,
                                        const RunParams& params);

/// Fraction of combined received powers (gain + tx power) strictly below
/// each threshold of the grid.
std::vector<std::pair<double, double>> outage_curve(const std::vector<double>& combined_gains_db,
                                                    double tx_power_dbm,
                                                    const std::vector<double>& grid_dbm);

struct MetricsSummary {
  std::vector<std::pair<double, double>> outage_curve;  // (sensitivity_dbm, probability)
  double throughput_pps = 0.0;  // successful packets per second per flow
  double success_rate = 0.0;
  double delay_avg_ms = 0.0;
  double delay_max_ms = 0.0;
  double energy_avg_mj = 0.0;
  double energy_max_mj = 0.0;
  std::map<int, double> hop_histogram;  // fraction of outcomes per hop count
  double no_route_fraction = 0.0;
  double retransmit_fraction = 0.0;
  std::size_t n_outcomes = 0;
  int n_windows = 0;
  int n_flows = 0;
};

/// Aggregate outcomes. No-route outcomes count as failures for throughput
/// and fill no_route_fraction, but are excluded from the outage curve and
/// from the delay/energy statistics. Hop fractions plus no_route_fraction
/// sum to one.
MetricsSummary summarize(const std::vector<PacketOutcome>& outcomes,
                         const std::vector<double>& grid_dbm, double tx_power_dbm = 0.0,
                         int window_period_ms = kDefaultWindowPeriodMs);

/// Default root pick: the hub with the highest mean PRR toward all other
/// hubs (absent edges count as zero), smallest id on ties.
NodeId auto_orpl_root(const LinkGraph& first_window_graph);

}  // namespace bbnsim
