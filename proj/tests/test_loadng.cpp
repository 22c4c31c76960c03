#include <doctest.h>

#include <random>
#include <set>

#include "bbnsim/errors.hpp"
#include "bbnsim/loadng.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace bbnsim;

namespace {

LinkGraph gain_graph(const std::vector<std::tuple<NodeId, NodeId, double>>& mean_gains) {
  std::vector<std::tuple<NodeId, NodeId, double, double>> edges;
  std::set<NodeId> nodes;
  for (const auto& [tx, rx, gain] : mean_gains) {
    edges.push_back({tx, rx, 1.0, gain});
    nodes.insert(tx);
    nodes.insert(rx);
  }
  return builders::make_prr_graph({nodes.begin(), nodes.end()}, edges);
}

}  // namespace

TEST_CASE("the strongest direct link is the route") {
  const auto graph = gain_graph({{1, 2, -55.0}, {1, 3, -70.0}, {3, 2, -70.0}});
  const auto route = discover_route(1, 2, graph);
  REQUIRE(route);
  CHECK(route->hops == std::vector<NodeId>{1, 2});
  CHECK(route->cost == doctest::Approx(15.0));  // max(0, 55 - 40)
}

TEST_CASE("weak direct links lose to strong relayed pairs") {
  // direct: max(0, 95-40) = 55; relayed: 20 + 20 = 40.
  const auto graph = gain_graph({{1, 2, -95.0}, {1, 3, -60.0}, {3, 2, -60.0}});
  const auto route = discover_route(1, 2, graph);
  REQUIRE(route);
  CHECK(route->hops == std::vector<NodeId>{1, 3, 2});
  CHECK(route->cost == doctest::Approx(40.0));
}

TEST_CASE("unreachable destinations yield no route") {
  // Node 2 has only an outgoing edge; nothing reaches it.
  CHECK(!discover_route(1, 2, gain_graph({{1, 3, -60.0}, {2, 3, -60.0}})));
  // Node 2 missing from the graph entirely.
  CHECK(!discover_route(1, 2, gain_graph({{1, 3, -60.0}})));
}

TEST_CASE("discovery is idempotent and matches brute force on static graphs") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> mean_gain(-100.0, -45.0);
  std::bernoulli_distribution present(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::tuple<NodeId, NodeId, double>> edges;
    for (NodeId a = 1; a <= 7; ++a)
      for (NodeId b = 1; b <= 7; ++b)
        if (a != b && present(rng)) edges.push_back({a, b, mean_gain(rng)});
    const auto graph = gain_graph(edges);
    if (!graph.has_node(1) || !graph.has_node(2)) continue;

    const auto once = discover_route(1, 2, graph);
    const auto twice = discover_route(1, 2, graph);
    CHECK(once == twice);

    const auto oracle = oracles::enumerate_min_cost(
        graph.nodes,
        [&graph](NodeId u, NodeId v) -> std::optional<double> {
          const LinkStats* e = graph.edge(u, v);
          if (!e) return std::nullopt;
          return loadng_edge_weight(*e, 40.0);
        },
        1, 2);
    if (oracle) {
      REQUIRE(once);
      CHECK(once->cost == doctest::Approx(*oracle).epsilon(1e-12));
    } else {
      CHECK(!once);
    }
  }
}

TEST_CASE("fresh cached routes are served unchanged") {
  const auto graph = gain_graph({{1, 2, -55.0}});
  ReactiveRouteCache cache;
  const auto first = cache.serve_or_repair(1, 2, 0, graph);
  REQUIRE(first);
  const auto again = cache.serve_or_repair(1, 2, 100, graph);
  CHECK(first == again);
}

TEST_CASE("entries past the hold time are rediscovered") {
  auto graph = gain_graph({{1, 2, -55.0}, {1, 3, -50.0}, {3, 2, -50.0}});
  ReactiveRouteCache cache;
  const auto first = cache.serve_or_repair(1, 2, 0, graph);
  REQUIRE(first);

  // The graph shifts while the entry ages out: rediscovery sees the change.
  graph.edges.erase({1, 2});
  const auto expired = cache.serve_or_repair(1, 2, 600, graph);
  REQUIRE(expired);
  CHECK(expired->hops == std::vector<NodeId>{1, 3, 2});
}

TEST_CASE("broken hop edges force mid-hold-time repair") {
  auto graph = gain_graph({{1, 2, -55.0}, {1, 3, -50.0}, {3, 2, -50.0}});
  ReactiveRouteCache cache;
  REQUIRE(cache.serve_or_repair(1, 2, 0, graph));

  graph.edges.erase({1, 2});
  const auto repaired = cache.serve_or_repair(1, 2, 100, graph);
  REQUIRE(repaired);
  CHECK(repaired->hops == std::vector<NodeId>{1, 3, 2});
}

TEST_CASE("reported failures invalidate the entry") {
  auto graph = gain_graph({{1, 2, -55.0}, {1, 3, -56.0}, {3, 2, -56.0}});
  ReactiveRouteCache cache;
  REQUIRE(cache.serve_or_repair(1, 2, 0, graph));

  cache.report_failure(1, 2);
  graph.edges.at({1, 2}).mean_gain_db = -99.0;  // direct got much worse
  const auto after = cache.serve_or_repair(1, 2, 100, graph);
  REQUIRE(after);
  CHECK(after->hops == std::vector<NodeId>{1, 3, 2});
}

TEST_CASE("served routes only use live edges and respect the hold time") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> mean_gain(-100.0, -45.0);
  std::bernoulli_distribution present(0.6);
  ReactiveRouteCache cache;
  std::map<std::pair<NodeId, NodeId>, std::pair<Route, std::int64_t>> shadow;

  for (int step = 0; step < 300; ++step) {
    std::vector<std::tuple<NodeId, NodeId, double>> edges;
    for (NodeId a = 1; a <= 5; ++a)
      for (NodeId b = 1; b <= 5; ++b)
        if (a != b && present(rng)) edges.push_back({a, b, mean_gain(rng)});
    const auto graph = gain_graph(edges);
    if (!graph.has_node(1) || !graph.has_node(2)) continue;
    const std::int64_t now = step * 50;

    const auto route = cache.serve_or_repair(1, 2, now, graph);
    if (!route) continue;
    for (std::size_t i = 0; i + 1 < route->hops.size(); ++i)
      CHECK(graph.edge(route->hops[i], route->hops[i + 1]) != nullptr);

    auto it = shadow.find({1, 2});
    if (it != shadow.end() && *route == it->second.first)
      CHECK(now - it->second.second < 500);
    else
      shadow[{1, 2}] = {*route, now};
  }
}
