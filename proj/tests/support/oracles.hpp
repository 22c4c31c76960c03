#pragma once

// Test-only oracles, deliberately independent of the implementation paths
// they check: exhaustive path enumeration, literal re-implementations of
// the delay/energy arithmetic, series expansions and reference samplers.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "bbnsim/link_estimation.hpp"
#include "bbnsim/network.hpp"

namespace oracles {

using bbnsim::LinkGraph;
using bbnsim::NodeId;

using WeightFn = std::function<std::optional<double>(NodeId, NodeId)>;

/// Minimum simple-path cost by exhaustive depth-first enumeration, with
/// optional hop bound. Partial costs above the incumbent are pruned.
inline std::optional<double> enumerate_min_cost(const std::vector<NodeId>& nodes,
                                                const WeightFn& weight, NodeId s, NodeId d,
                                                int max_hops = -1) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<NodeId> stack{s};
  std::vector<bool> used(nodes.size(), false);
  auto index_of = [&nodes](NodeId n) {
    return static_cast<std::size_t>(
        std::find(nodes.begin(), nodes.end(), n) - nodes.begin());
  };
  used[index_of(s)] = true;

  std::function<void(NodeId, double, int)> dfs = [&](NodeId u, double cost, int hops) {
    if (u == d) {
      best = std::min(best, cost);
      return;
    }
    if (max_hops >= 0 && hops >= max_hops) return;
    for (NodeId v : nodes) {
      const std::size_t vi = index_of(v);
      if (used[vi]) continue;
      auto w = weight(u, v);
      if (!w) continue;
      if (cost + *w >= best) continue;
      used[vi] = true;
      dfs(v, cost + *w, hops + 1);
      used[vi] = false;
    }
  };
  dfs(s, 0.0, 0);
  if (!std::isfinite(best)) return std::nullopt;
  return best;
}

inline WeightFn etx_weight_of(const LinkGraph& graph) {
  return [&graph](NodeId u, NodeId v) -> std::optional<double> {
    const bbnsim::LinkStats* e = graph.edge(u, v);
    if (!e || !std::isfinite(e->etx)) return std::nullopt;
    return e->etx;
  };
}

/// Eq.-literal 3-branch combiner: max of the direct gain and of
/// min(up, down) per relayed branch.
inline double brute_selection_combine(double direct,
                                      const std::vector<std::pair<double, double>>& branches) {
  double best = direct;
  for (const auto& [up, down] : branches) best = std::max(best, std::min(up, down));
  return best;
}

/// Literal delay formula: per-hop transmission plus per-intermediate wait,
/// doubled on retransmission.
inline double naive_delay_ms(int hops, bool cooperative, bool retransmitted,
                             double t_packet_ms, double wait_hub_ms, double wait_cmr_ms) {
  const double wait = cooperative ? wait_cmr_ms : wait_hub_ms;
  double total = 0.0;
  for (int h = 0; h < hops; ++h) total += t_packet_ms;
  for (int h = 0; h < hops - 1; ++h) total += wait;
  return retransmitted ? 2.0 * total : total;
}

/// Literal energy formula, mW * ms -> mJ via /1000.
inline double naive_energy_mj(int hops, const std::vector<int>& relays_per_hop,
                              bool retransmitted, double t_packet_ms, double p_txh,
                              double p_rxh, double p_txs, double p_rxs, double p_idle,
                              double idle_ms) {
  double transmit = 0.0;
  for (int h = 0; h < hops; ++h) {
    transmit += t_packet_ms * (p_txh + p_rxh) / 1000.0;
    const int branches = h < static_cast<int>(relays_per_hop.size()) ? relays_per_hop[h] : 0;
    for (int b = 0; b < branches; ++b) {
      transmit += t_packet_ms * (p_txh + p_rxs) / 1000.0;  // hub -> sensor
      transmit += t_packet_ms * (p_txs + p_rxh) / 1000.0;  // sensor -> hub
    }
  }
  if (retransmitted) transmit *= 2.0;
  double idle = 0.0;
  for (int h = 0; h < hops - 1; ++h) idle += idle_ms * p_idle / 1000.0;
  return transmit + idle;
}

/// Power series of I0: sum_k (x^2/4)^k / (k!)^2.
inline double i0_series(double x) {
  const double q = x * x / 4.0;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

inline double lag1_autocorr(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    den += (xs[i] - mean) * (xs[i] - mean);
    if (i + 1 < xs.size()) num += (xs[i] - mean) * (xs[i + 1] - mean);
  }
  return num / den;
}

inline std::vector<double> sample_gamma(std::size_t n, double shape, double scale,
                                        std::mt19937_64& rng) {
  std::gamma_distribution<double> dist(shape, scale);
  std::vector<double> out(n);
  for (double& x : out) x = dist(rng);
  return out;
}

/// Rician amplitude: |nu + N(0,sigma) + i N(0,sigma)|.
inline std::vector<double> sample_rician(std::size_t n, double nu, double sigma,
                                         std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, sigma);
  std::vector<double> out(n);
  for (double& x : out) {
    const double re = nu + normal(rng);
    const double im = normal(rng);
    x = std::sqrt(re * re + im * im);
  }
  return out;
}

}  // namespace oracles
