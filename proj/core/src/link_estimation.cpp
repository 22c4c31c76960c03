#include "bbnsim/link_estimation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace bbnsim {

std::optional<LinkStats> estimate_link(const TimestampWindow& window, LinkId link,
                                       double sensitivity_dbm, double tx_power_dbm) {
  auto it = window.link_samples.find(link);
  if (it == window.link_samples.end() || it->second.empty()) return std::nullopt;
  const std::vector<double>& gains = it->second;

  std::size_t below = 0;
  double sum = 0.0;
  for (double g : gains) {
    if (g + tx_power_dbm < sensitivity_dbm) ++below;
    sum += g;
  }

  LinkStats stats;
  stats.outage_prob = static_cast<double>(below) / static_cast<double>(gains.size());
  stats.prr = 1.0 - stats.outage_prob;
  stats.etx = stats.outage_prob < 1.0 ? 1.0 / (1.0 - stats.outage_prob)
                                      : std::numeric_limits<double>::infinity();
  stats.mean_gain_db = sum / static_cast<double>(gains.size());
  return stats;
}

bool LinkGraph::has_node(NodeId n) const {
  return std::binary_search(nodes.begin(), nodes.end(), n);
}

const LinkStats* LinkGraph::edge(NodeId tx, NodeId rx) const {
  auto it = edges.find({tx, rx});
  return it == edges.end() ? nullptr : &it->second;
}

LinkGraph build_graph(const TimestampWindow& window, const Network& network,
                      double sensitivity_dbm) {
  LinkGraph graph;
  graph.nodes = network.hubs();
  graph.sensitivity_dbm = sensitivity_dbm;
  for (NodeId tx : graph.nodes) {
    for (NodeId rx : graph.nodes) {
      if (tx == rx) continue;
      auto stats = estimate_link(window, {tx, rx}, sensitivity_dbm,
                                 network.tx_power_dbm(tx));
      if (stats && stats->prr > 0.0) graph.edges.emplace(LinkId{tx, rx}, *stats);
    }
  }
  return graph;
}

}  // namespace bbnsim
