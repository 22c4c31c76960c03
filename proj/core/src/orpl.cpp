#include "bbnsim/orpl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bbnsim/errors.hpp"

namespace bbnsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEdcTol = 1e-9;
constexpr int kMaxSweeps = 1000;

double edc_of_set(double sum_p, double sum_p_edc, double omega) {
  return 1.0 / sum_p + sum_p_edc / sum_p + omega;
}

}  // namespace

bool EdcTable::routing_set_contains(NodeId carrier, NodeId dest) const {
  auto it = routing_sets.find(carrier);
  return it != routing_sets.end() && it->second.count(dest) != 0;
}

EdcTable compute_edc(const LinkGraph& graph, NodeId root, double omega) {
  if (!graph.has_node(root))
    throw UnknownNodeError("root " + std::to_string(root) + " not in graph");

  EdcTable table;
  table.root = root;
  table.omega = omega;
  for (NodeId n : graph.nodes) table.edc[n] = n == root ? 0.0 : kInf;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double max_change = 0.0;
    for (NodeId i : graph.nodes) {
      if (i == root) continue;

      // Candidate forwarders ordered by current EDC; kept while each
      // addition strictly decreases this node's own EDC.
      std::vector<std::pair<double, NodeId>> candidates;
      for (NodeId j : graph.nodes) {
        if (j == i) continue;
        const LinkStats* e = graph.edge(i, j);
        if (e && e->prr > 0.0) candidates.push_back({table.edc[j], j});
      }
      std::sort(candidates.begin(), candidates.end());

      std::vector<NodeId> set;
      double sum_p = 0.0, sum_p_edc = 0.0;
      double best = kInf;
      for (const auto& [edc_j, j] : candidates) {
        if (!std::isfinite(edc_j)) break;
        const double p = graph.edge(i, j)->prr;
        const double cand = edc_of_set(sum_p + p, sum_p_edc + p * edc_j, omega);
        if (cand < best) {
          set.push_back(j);
          sum_p += p;
          sum_p_edc += p * edc_j;
          best = cand;
        } else {
          break;
        }
      }

      const double old = table.edc[i];
      table.edc[i] = best;
      table.forwarder_sets[i] = std::move(set);
      if (std::isfinite(best) || std::isfinite(old))
        max_change = std::max(max_change, std::isfinite(old) ? std::abs(old - best) : kInf);
    }
    if (max_change < kEdcTol) break;
  }
  table.forwarder_sets[root] = {};

  // Sub-DODAG membership: a node belongs to the routing set of each of its
  // ancestors under the converged forwarder sets, and to its own.
  for (NodeId n : graph.nodes) table.routing_sets[n].insert(n);
  for (NodeId n : graph.nodes) {
    std::vector<NodeId> frontier{n};
    std::set<NodeId> visited{n};
    while (!frontier.empty()) {
      NodeId cur = frontier.back();
      frontier.pop_back();
      for (NodeId parent : table.forwarder_sets[cur]) {
        if (!visited.insert(parent).second) continue;
        table.routing_sets[parent].insert(n);
        frontier.push_back(parent);
      }
    }
  }
  return table;
}

std::optional<Route> orpl_route(NodeId s, NodeId d, const EdcTable& table,
                                const LinkGraph& graph) {
  if (s == d) throw Error("source equals destination");
  if (!graph.has_node(s) || !graph.has_node(d)) return std::nullopt;

  Route route;
  route.protocol = Protocol::Orpl;
  route.hops = {s};
  route.cost = 0.0;

  std::set<NodeId> visited{s};
  NodeId current = s;
  while (current != d) {
    const double edc_cur = table.edc.count(current) ? table.edc.at(current) : kInf;
    const bool downward = current == table.root || table.routing_set_contains(current, d);

    // Admissible forwarders; best EDC wins, then best link quality.
    struct Candidate {
      double edc;
      double neg_prr;
      NodeId node;
    };
    std::optional<Candidate> best;
    std::optional<Candidate> best_with_dest;  // upward: prefer sub-DODAGs holding d
    for (NodeId b : graph.nodes) {
      if (visited.count(b) != 0) continue;
      const LinkStats* e = graph.edge(current, b);
      if (!e || e->prr <= 0.5) continue;
      const double edc_b = table.edc.count(b) ? table.edc.at(b) : kInf;
      bool admissible = downward ? (edc_cur < edc_b + table.omega) &&
                                       table.routing_set_contains(b, d)
                                 : edc_b + table.omega < edc_cur;
      if (!admissible) continue;
      Candidate cand{edc_b, -e->prr, b};
      auto better = [](const Candidate& a, const Candidate& c) {
        return std::tie(a.edc, a.neg_prr, a.node) < std::tie(c.edc, c.neg_prr, c.node);
      };
      if (!best || better(cand, *best)) best = cand;
      if (!downward && table.routing_set_contains(b, d) &&
          (!best_with_dest || better(cand, *best_with_dest)))
        best_with_dest = cand;
    }
    if (!downward && best_with_dest) best = best_with_dest;
    if (!best) return std::nullopt;

    const LinkStats* e = graph.edge(current, best->node);
    route.cost += 1.0 / e->prr;  // expected transmissions on the chosen hop
    route.hops.push_back(best->node);
    visited.insert(best->node);
    current = best->node;
  }
  route.hop_count = static_cast<int>(route.hops.size()) - 1;
  return route;
}

TrickleTimer::TrickleTimer(TrickleConfig cfg, int window_period_ms, std::uint64_t seed)
    : cfg_(cfg), window_period_ms_(window_period_ms), rng_(seed) {
  if (cfg_.i_min_ms <= 0 || cfg_.i_min_ms > cfg_.i_max_ms)
    throw Error("trickle bounds must satisfy 0 < i_min <= i_max");
  if (cfg_.redundancy_k < 1) throw Error("trickle redundancy constant must be >= 1");
  if (window_period_ms_ <= 0) throw Error("window period must be positive");
  interval_ms_ = cfg_.i_min_ms;
  start_interval();
}

void TrickleTimer::start_interval() {
  interval_windows_ = static_cast<int>((interval_ms_ + window_period_ms_ - 1) /
                                       window_period_ms_);
  if (interval_windows_ < 1) interval_windows_ = 1;
  // Transmission slot in the second half of the interval.
  const int lo = interval_windows_ / 2;
  const int hi = interval_windows_ - 1;
  fire_offset_ = lo >= hi ? hi
                          : std::uniform_int_distribution<int>(lo, hi)(rng_);
  position_ = 0;
  heard_ = 0;
}

bool TrickleTimer::advance() {
  // One potential consistent broadcast per window.
  heard_ += std::bernoulli_distribution(0.5)(rng_) ? 1 : 0;
  const bool fire = position_ == fire_offset_ && heard_ < cfg_.redundancy_k;
  ++position_;
  if (position_ >= interval_windows_) {
    interval_ms_ = std::min<std::int64_t>(interval_ms_ * 2, cfg_.i_max_ms);
    start_interval();
  }
  return fire;
}

bool trickle_refresh(int window_index, const TrickleConfig& cfg, std::uint64_t rng_seed) {
  if (window_index < 0) throw Error("window index must be nonnegative");
  TrickleTimer timer(cfg, kDefaultWindowPeriodMs, rng_seed);
  bool fired = false;
  for (int w = 0; w <= window_index; ++w) fired = timer.advance();
  return fired;
}

}  // namespace bbnsim
