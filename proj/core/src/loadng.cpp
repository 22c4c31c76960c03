#include "bbnsim/loadng.hpp"

#include <algorithm>
#include <cmath>

#include "bbnsim/errors.hpp"
#include "path_search.hpp"

namespace bbnsim {

double loadng_edge_weight(const LinkStats& stats, double weight_offset_db) {
  return std::max(0.0, -stats.mean_gain_db - weight_offset_db);
}

std::optional<Route> discover_route(NodeId s, NodeId d, const LinkGraph& graph,
                                    double weight_offset_db) {
  if (s == d) throw Error("source equals destination");
  if (!graph.has_node(s) || !graph.has_node(d)) return std::nullopt;

  auto weight = [&graph, weight_offset_db](NodeId u, NodeId v) -> std::optional<double> {
    const LinkStats* e = graph.edge(u, v);
    if (!e) return std::nullopt;
    return loadng_edge_weight(*e, weight_offset_db);
  };
  auto label = detail::dijkstra(graph.nodes, weight, s, d);
  if (!label) return std::nullopt;

  Route route;
  route.protocol = Protocol::Loadng;
  route.hops = label->hops;
  route.cost = label->cost;
  route.hop_count = static_cast<int>(label->hops.size()) - 1;
  return route;
}

std::optional<Route> ReactiveRouteCache::serve_or_repair(NodeId s, NodeId d,
                                                         std::int64_t now_ms,
                                                         const LinkGraph& graph) {
  auto it = entries_.find({s, d});
  if (it != entries_.end()) {
    const Entry& entry = it->second;
    const bool fresh = now_ms - entry.established_at_ms < params_.rht_ms;
    bool alive = true;
    for (std::size_t i = 0; i + 1 < entry.route.hops.size() && alive; ++i)
      alive = graph.edge(entry.route.hops[i], entry.route.hops[i + 1]) != nullptr;
    if (fresh && alive) return entry.route;
    entries_.erase(it);
  }
  auto route = discover_route(s, d, graph, params_.weight_offset_db);
  if (route) entries_[{s, d}] = Entry{*route, now_ms};
  return route;
}

void ReactiveRouteCache::report_failure(NodeId s, NodeId d) { entries_.erase({s, d}); }

}  // namespace bbnsim
