#include "bbnsim/spr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bbnsim/errors.hpp"
#include "path_search.hpp"

namespace bbnsim {

namespace {

Route route_from_label(const detail::PathLabel& label) {
  Route r;
  r.protocol = Protocol::Spr;
  r.hops = label.hops;
  r.cost = label.cost;
  r.hop_count = static_cast<int>(label.hops.size()) - 1;
  return r;
}

Route direct_fallback(const LinkGraph& graph, NodeId s, NodeId d) {
  Route r;
  r.protocol = Protocol::Spr;
  r.hops = {s, d};
  r.hop_count = 1;
  r.fallback = true;
  const LinkStats* e = graph.edge(s, d);
  r.cost = e ? e->etx : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace

Route shortest_path(const LinkGraph& graph, NodeId s, NodeId d,
                    std::optional<int> hop_limit) {
  if (!graph.has_node(s)) throw UnknownNodeError("source " + std::to_string(s) + " not in graph");
  if (!graph.has_node(d)) throw UnknownNodeError("destination " + std::to_string(d) + " not in graph");
  if (s == d) throw Error("source equals destination");
  if (hop_limit && *hop_limit < 1) throw Error("hop limit must be at least 1");

  auto weight = detail::etx_weight(graph);
  std::optional<detail::PathLabel> label =
      hop_limit ? detail::bounded_search(graph.nodes, weight, s, d, *hop_limit)
                : detail::dijkstra(graph.nodes, weight, s, d);
  if (!label) return direct_fallback(graph, s, d);
  return route_from_label(*label);
}

double spr_combined_gain(const Route& route, const GainSource& gains) {
  double combined = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < route.hops.size(); ++i) {
    auto g = gains.at(route.hops[i], route.hops[i + 1]);
    if (!g)
      throw IncompleteObservationError("no gain for hop " + std::to_string(route.hops[i]) +
                                       "->" + std::to_string(route.hops[i + 1]));
    combined = std::min(combined, *g);
  }
  return combined;
}

double spr_combined_gain(const Route& route, const std::map<LinkId, double>& gains) {
  MapGainSource source(gains);
  return spr_combined_gain(route, source);
}

}  // namespace bbnsim
