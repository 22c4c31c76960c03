#include "bbnsim/network.hpp"

#include <algorithm>
#include <string>

#include "bbnsim/errors.hpp"

namespace bbnsim {

Network::Network(std::vector<Ban> bans, std::map<NodeId, double> tx_power_dbm)
    : bans_(std::move(bans)), tx_power_dbm_(std::move(tx_power_dbm)) {
  if (bans_.empty()) throw SchemaError("network needs at least one BAN");
  for (std::size_t b = 0; b < bans_.size(); ++b) {
    const Ban& ban = bans_[b];
    if (ban.sensors.size() != 2)
      throw SchemaError("BAN " + std::to_string(ban.ban_id) +
                        " must have exactly two sensors");
    if (!index_.emplace(ban.hub, Slot{b, NodeRole::Hub}).second)
      throw SchemaError("node " + std::to_string(ban.hub) + " has more than one role");
    hubs_.push_back(ban.hub);
    for (NodeId s : ban.sensors) {
      if (!index_.emplace(s, Slot{b, NodeRole::Sensor}).second)
        throw SchemaError("node " + std::to_string(s) + " has more than one role");
    }
  }
  std::sort(hubs_.begin(), hubs_.end());
  for (const auto& [node, slot] : index_) {
    (void)slot;
    if (tx_power_dbm_.count(node) == 0)
      throw SchemaError("tx power undefined for node " + std::to_string(node));
  }
}

const Network::Slot& Network::slot(NodeId node) const {
  auto it = index_.find(node);
  if (it == index_.end())
    throw UnknownNodeError("unknown node id " + std::to_string(node));
  return it->second;
}

bool Network::is_hub(NodeId node) const { return slot(node).role == NodeRole::Hub; }

NodeRole Network::role(NodeId node) const { return slot(node).role; }

int Network::ban_id_of(NodeId node) const { return bans_[slot(node).ban_index].ban_id; }

const std::vector<NodeId>& Network::sensors_of_ban(NodeId node) const {
  return bans_[slot(node).ban_index].sensors;
}

double Network::tx_power_dbm(NodeId node) const {
  auto it = tx_power_dbm_.find(node);
  if (it == tx_power_dbm_.end())
    throw UnknownNodeError("unknown node id " + std::to_string(node));
  return it->second;
}

std::vector<NodeId> Network::nodes() const {
  std::vector<NodeId> out;
  out.reserve(index_.size());
  for (const auto& [node, slot] : index_) {
    (void)slot;
    out.push_back(node);
  }
  return out;
}

Network make_default_network(int n_bans, double hub_tx_dbm, double sensor_tx_dbm) {
  if (n_bans < 1) throw SchemaError("need at least one BAN");
  std::vector<Ban> bans;
  std::map<NodeId, double> power;
  for (int i = 1; i <= n_bans; ++i) {
    NodeId hub = i;
    NodeId s1 = 100 * i + 1;
    NodeId s2 = 100 * i + 2;
    bans.push_back(Ban{i, hub, {s1, s2}});
    power[hub] = hub_tx_dbm;
    power[s1] = sensor_tx_dbm;
    power[s2] = sensor_tx_dbm;
  }
  return Network(std::move(bans), std::move(power));
}

}  // namespace bbnsim
