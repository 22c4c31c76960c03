#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bbnsim/trace.hpp"

namespace bbnsim {

/// Per-window statistics of one directed link.
struct LinkStats {
  double outage_prob = 0.0;  // fraction of samples received below sensitivity
  double etx = 1.0;          // 1 / (1 - outage_prob); +inf at outage 1
  double prr = 1.0;          // 1 - outage_prob
  double mean_gain_db = 0.0;
};

/// Stats for one link over one window, or nullopt when the window holds no
/// samples for it (caller treats the link as absent).
std::optional<LinkStats> estimate_link(const TimestampWindow& window, LinkId link,
                                       double sensitivity_dbm, double tx_power_dbm);

/// Hub-level routing substrate for one window. An edge exists iff at least
/// one sample was received at or above the sensitivity (prr > 0).
struct LinkGraph {
  std::vector<NodeId> nodes;  // hub ids, sorted
  std::map<LinkId, LinkStats> edges;
  double sensitivity_dbm = -100.0;

  bool has_node(NodeId n) const;
  const LinkStats* edge(NodeId tx, NodeId rx) const;
};

LinkGraph build_graph(const TimestampWindow& window, const Network& network,
                      double sensitivity_dbm);

}  // namespace bbnsim
