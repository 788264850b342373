#include <benchmark/benchmark.h>

#include "gather/engine.hpp"
#include "gather/generators.hpp"
#include "gather/metrics.hpp"

namespace {

void BM_FindHop(benchmark::State& state) {
  gather::Swarm s = gather::random_connected(120, 7);
  const auto& lib = gather::default_patterns();
  const auto cells = s.cells();
  std::size_t i = 0;
  for (auto _ : state) {
    auto snap = gather::Snapshot::take(s, cells[i % cells.size()]);
    benchmark::DoNotOptimize(gather::find_hop(snap, lib));
    ++i;
  }
}
BENCHMARK(BM_FindHop);

void BM_Step(benchmark::State& state) {
  const std::int64_t side = state.range(0);
  gather::Swarm s = gather::square_ring(side);
  gather::SimConfig cfg;
  cfg.lemma_checks = false;
  cfg.record_trace = false;
  for (auto _ : state) {
    auto [next, rr] = gather::step(s, gather::default_patterns(), cfg);
    benchmark::DoNotOptimize(rr.robots_after);
  }
}
BENCHMARK(BM_Step)->Arg(8)->Arg(16)->Arg(30);

void BM_Measures(benchmark::State& state) {
  gather::Swarm s = gather::random_connected(state.range(0), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gather::measures(s));
  }
}
BENCHMARK(BM_Measures)->Arg(50)->Arg(150);

void BM_FullRun(benchmark::State& state) {
  gather::Swarm s = gather::square_ring(state.range(0));
  gather::SimConfig cfg;
  cfg.lemma_checks = false;
  cfg.record_trace = false;
  for (auto _ : state) {
    gather::Trace t = gather::run(s, gather::default_patterns(), cfg);
    benchmark::DoNotOptimize(t.gathered_round);
  }
}
BENCHMARK(BM_FullRun)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
