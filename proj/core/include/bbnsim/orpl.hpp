#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "bbnsim/link_estimation.hpp"
#include "bbnsim/route.hpp"

namespace bbnsim {

struct TrickleConfig {
  int i_min_ms = 400;
  int i_max_ms = 1000;
  int redundancy_k = 4;
};

/// Converged expected-duty-cycle table over a DODAG rooted at `root`.
struct EdcTable {
  NodeId root = 0;
  double omega = 0.1;
  std::map<NodeId, double> edc;  // +inf when unreachable from the root
  std::map<NodeId, std::vector<NodeId>> forwarder_sets;  // S_i, best EDC first
  std::map<NodeId, std::set<NodeId>> routing_sets;  // sub-DODAG membership, self included

  bool routing_set_contains(NodeId carrier, NodeId dest) const;
};

/// Fixed point of the EDC recursion with greedily chosen forwarder sets:
/// neighbors are considered in ascending EDC order and kept only while each
/// addition strictly decreases the node's own EDC. Bellman-Ford style
/// sweeps run until the largest change drops below 1e-9.
EdcTable compute_edc(const LinkGraph& graph, NodeId root, double omega = 0.1);

/// Any-to-any route over the DODAG: climb toward the root through
/// forwarders with strictly better EDC and link quality above 50%, then
/// descend through nodes whose sub-DODAG holds the destination. Returns
/// nullopt when no admissible forwarder exists at some step.
std::optional<Route> orpl_route(NodeId s, NodeId d, const EdcTable& table,
                                const LinkGraph& graph);

/// Trickle timer quantized to the routing-window clock. Interval lengths in
/// windows are ceil(I / period); the transmission slot is drawn uniformly
/// from the second half of the interval; one potential consistent broadcast
/// is heard per window and suppresses the transmission once `k` of them
/// accumulated within the interval. No inconsistency resets are modeled.
class TrickleTimer {
 public:
  TrickleTimer(TrickleConfig cfg, int window_period_ms, std::uint64_t seed);

  /// Advance one window; true when the routing information is refreshed.
  bool advance();

 private:
  void start_interval();

  TrickleConfig cfg_;
  int window_period_ms_;
  std::mt19937_64 rng_;
  std::int64_t interval_ms_ = 0;
  int interval_windows_ = 0;
  int position_ = 0;
  int fire_offset_ = 0;
  int heard_ = 0;
};

/// Whether the ORPL table is refreshed at the given 500 ms window.
/// Stateless wrapper over TrickleTimer, deterministic for a fixed seed.
bool trickle_refresh(int window_index, const TrickleConfig& cfg, std::uint64_t rng_seed);

}  // namespace bbnsim
