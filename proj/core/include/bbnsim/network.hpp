#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace bbnsim {

using NodeId = std::int32_t;

enum class NodeRole { Hub, Sensor };

/// One body-area network: a hub participating in the hub-level mesh plus
/// two on-body sensors usable as decode-and-forward relays.
struct Ban {
  int ban_id = 0;
  NodeId hub = 0;
  std::vector<NodeId> sensors;  // exactly two
};

/// Fixed device population with per-node transmit power (dBm).
///
/// Immutable after construction; safe to share across threads.
class Network {
 public:
  Network(std::vector<Ban> bans, std::map<NodeId, double> tx_power_dbm);

  const std::vector<Ban>& bans() const { return bans_; }
  const std::vector<NodeId>& hubs() const { return hubs_; }

  bool contains(NodeId node) const { return index_.count(node) != 0; }
  bool is_hub(NodeId node) const;
  NodeRole role(NodeId node) const;
  int ban_id_of(NodeId node) const;
  /// The two on-body sensors of the BAN that `node` belongs to.
  const std::vector<NodeId>& sensors_of_ban(NodeId node) const;
  double tx_power_dbm(NodeId node) const;

  std::vector<NodeId> nodes() const;  // all node ids, sorted
  std::size_t node_count() const { return index_.size(); }

 private:
  struct Slot {
    std::size_t ban_index;
    NodeRole role;
  };
  const Slot& slot(NodeId node) const;

  std::vector<Ban> bans_;
  std::vector<NodeId> hubs_;
  std::map<NodeId, double> tx_power_dbm_;
  std::map<NodeId, Slot> index_;
};

/// 10-BAN default population: BAN i has hub id i and sensor ids 100*i+1,
/// 100*i+2. Matches the measurement deployment of one hub plus two
/// receivers per subject.
Network make_default_network(int n_bans = 10, double hub_tx_dbm = 0.0,
                             double sensor_tx_dbm = 0.0);

}  // namespace bbnsim
