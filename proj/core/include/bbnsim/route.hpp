#pragma once

#include <string>
#include <vector>

#include "bbnsim/network.hpp"

namespace bbnsim {

enum class Protocol { Spr, Cmr, Orpl, Loadng };

/// How a delivery attempt was routed.
enum class RouteKind {
  Primary,         // the protocol's first-choice route
  Alternate,       // CMR delivered through its second path
  DirectFallback,  // direct link taken because no route fit the hop limit
  NoRoute,         // no admissible route existed this window
};

std::string to_string(Protocol p);
std::string to_string(RouteKind k);

/// A simple hub-level path with its metric cost.
struct Route {
  Protocol protocol = Protocol::Spr;
  std::vector<NodeId> hops;  // source first, destination last
  double cost = 0.0;         // sum of edge weights along the path
  int hop_count = 0;         // hops.size() - 1
  bool fallback = false;     // direct path substituted for a missing route

  friend bool operator==(const Route&, const Route&) = default;
};

}  // namespace bbnsim
