#include <benchmark/benchmark.h>

#include <random>

#include "bbnsim/cmr.hpp"
#include "bbnsim/metrics.hpp"
#include "bbnsim/orpl.hpp"
#include "bbnsim/spr.hpp"
#include "bbnsim/stats_fit.hpp"
#include "bbnsim/synth.hpp"

using namespace bbnsim;

namespace {

LinkGraph dense_graph(int n_hubs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> prr(0.3, 1.0);
  LinkGraph graph;
  for (NodeId a = 1; a <= n_hubs; ++a) graph.nodes.push_back(a);
  for (NodeId a = 1; a <= n_hubs; ++a)
    for (NodeId b = 1; b <= n_hubs; ++b) {
      if (a == b) continue;
      LinkStats stats;
      stats.prr = prr(rng);
      stats.outage_prob = 1.0 - stats.prr;
      stats.etx = 1.0 / stats.prr;
      stats.mean_gain_db = -60.0 - 40.0 * stats.outage_prob;
      graph.edges[{a, b}] = stats;
    }
  return graph;
}

ChannelTrace bench_trace(int n_bans, std::int64_t duration_ms) {
  SynthModel model;
  model.defaults.mean_gain_db = -85.0;
  model.defaults.innovation_std_db = 9.0;
  model.mean_jitter_db = 6.0;
  return generate_synthetic(make_default_network(n_bans), duration_ms, 99, model);
}

void BM_ShortestPathUnrestricted(benchmark::State& state) {
  const LinkGraph graph = dense_graph(static_cast<int>(state.range(0)), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(shortest_path(graph, 1, 2));
}
BENCHMARK(BM_ShortestPathUnrestricted)->Arg(10)->Arg(20);

void BM_ShortestPathHopLimited(benchmark::State& state) {
  const LinkGraph graph = dense_graph(static_cast<int>(state.range(0)), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(shortest_path(graph, 1, 2, 2));
}
BENCHMARK(BM_ShortestPathHopLimited)->Arg(10)->Arg(20);

void BM_PlanCmrRoutes(benchmark::State& state) {
  const Network net = make_default_network(10);
  const LinkGraph graph = dense_graph(10, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(plan_routes(1, 2, graph, net));
}
BENCHMARK(BM_PlanCmrRoutes);

void BM_ComputeEdc(benchmark::State& state) {
  const LinkGraph graph = dense_graph(static_cast<int>(state.range(0)), 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_edc(graph, 1));
}
BENCHMARK(BM_ComputeEdc)->Arg(10)->Arg(20);

void BM_BuildGraph(benchmark::State& state) {
  const ChannelTrace trace = bench_trace(10, 1000);
  const auto windows = window(trace, 500);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_graph(windows[0], trace.network, -100.0));
}
BENCHMARK(BM_BuildGraph);

void BM_RunProtocolWindow(benchmark::State& state) {
  const ChannelTrace trace = bench_trace(10, 10'000);
  std::vector<std::pair<NodeId, NodeId>> flows;
  for (NodeId d = 2; d <= 10; ++d) flows.push_back({1, d});
  RunParams params;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        run_protocol(trace, ProtocolRun{Protocol::Cmr, 2}, flows, params));
}
BENCHMARK(BM_RunProtocolWindow);

void BM_FitGamma(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::gamma_distribution<double> dist(9.58, 3.34e-6);
  std::vector<double> samples(static_cast<std::size_t>(state.range(0)));
  for (double& x : samples) x = dist(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(fit_gamma(samples));
}
BENCHMARK(BM_FitGamma)->Arg(10'000)->Arg(100'000);

}  // namespace

BENCHMARK_MAIN();
