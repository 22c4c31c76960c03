#include "path_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace bbnsim::detail {

bool label_less(const PathLabel& a, const PathLabel& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.hops.size() != b.hops.size()) return a.hops.size() < b.hops.size();
  return a.hops < b.hops;
}

std::optional<PathLabel> dijkstra(const std::vector<NodeId>& nodes, const EdgeWeight& weight,
                                  NodeId s, NodeId d) {
  std::map<NodeId, PathLabel> best;
  std::map<NodeId, bool> done;
  best[s] = PathLabel{0.0, {s}};

  while (true) {
    // Smallest unsettled label; node populations are small enough that a
    // linear scan beats maintaining a heap with path payloads.
    const NodeId* next = nullptr;
    for (const auto& [node, label] : best) {
      if (done[node]) continue;
      if (!next || label_less(label, best[*next])) next = &node;
    }
    if (!next) break;
    NodeId u = *next;
    if (u == d) break;
    done[u] = true;

    for (NodeId v : nodes) {
      if (v == u || done[v]) continue;
      auto w = weight(u, v);
      if (!w) continue;
      PathLabel cand{best[u].cost + *w, best[u].hops};
      cand.hops.push_back(v);
      auto it = best.find(v);
      if (it == best.end() || label_less(cand, it->second)) best[v] = std::move(cand);
    }
  }

  auto it = best.find(d);
  if (it == best.end()) return std::nullopt;
  return it->second;
}

std::optional<PathLabel> bounded_search(const std::vector<NodeId>& nodes,
                                        const EdgeWeight& weight, NodeId s, NodeId d,
                                        int max_hops) {
  std::map<NodeId, PathLabel> reach;  // best label using <= round edges
  reach[s] = PathLabel{0.0, {s}};
  for (int round = 0; round < max_hops; ++round) {
    std::map<NodeId, PathLabel> next = reach;
    for (const auto& [u, label] : reach) {
      for (NodeId v : nodes) {
        if (v == u) continue;
        if (std::find(label.hops.begin(), label.hops.end(), v) != label.hops.end())
          continue;  // simple paths only
        auto w = weight(u, v);
        if (!w) continue;
        PathLabel cand{label.cost + *w, label.hops};
        cand.hops.push_back(v);
        auto it = next.find(v);
        if (it == next.end() || label_less(cand, it->second)) next[v] = std::move(cand);
      }
    }
    reach = std::move(next);
  }
  auto it = reach.find(d);
  if (it == reach.end()) return std::nullopt;
  return it->second;
}

EdgeWeight etx_weight(const LinkGraph& graph) {
  return [&graph](NodeId u, NodeId v) -> std::optional<double> {
    const LinkStats* e = graph.edge(u, v);
    if (!e || !std::isfinite(e->etx)) return std::nullopt;
    return e->etx;
  };
}

}  // namespace bbnsim::detail
