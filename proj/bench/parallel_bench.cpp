// Serial reference vs OpenMP paths on the independent flow batches.
#include <benchmark/benchmark.h>

#include "isocut/generators.hpp"
#include "isocut/isolating.hpp"
#include "isocut/oracles.hpp"
#include "isocut/steiner.hpp"

using namespace isocut;

namespace {

WeightedGraph gnp(int n) {
  GeneratorSpec s;
  s.kind = "gnp-weighted";
  s.n = n;
  s.p = 0.1;
  s.max_weight = 100;
  s.seed = 7;
  return generate(s);
}

WeightedGraph dumbbell(int n) {
  GeneratorSpec s;
  s.kind = "dumbbell";
  s.n = n;
  return generate(s);
}

Execution mode(const benchmark::State& st) { return st.range(1) ? Execution::parallel : Execution::serial; }

void BM_IsolatingCuts(benchmark::State& st) {
  const WeightedGraph g = gnp(static_cast<int>(st.range(0)));
  VertexSet r(g.n());
  for (int v = 0; v < g.n(); v += 8) r.insert(v);
  const DinicEngine engine;
  for (auto _ : st) {
    FlowMeter m;
    benchmark::DoNotOptimize(minimum_isolating_cuts(engine, g, r, m, mode(st)));
  }
}
BENCHMARK(BM_IsolatingCuts)->ArgsProduct({{128, 256}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_NaiveIsolating(benchmark::State& st) {
  const WeightedGraph g = gnp(static_cast<int>(st.range(0)));
  VertexSet r(g.n());
  for (int v = 0; v < g.n(); v += 8) r.insert(v);
  const DinicEngine engine;
  for (auto _ : st) {
    FlowMeter m;
    benchmark::DoNotOptimize(oracles::naive_isolating(engine, g, r, m));
  }
}
BENCHMARK(BM_NaiveIsolating)->Args({128})->Args({256})->Unit(benchmark::kMillisecond);

void BM_UnbalancedCase(benchmark::State& st) {
  const WeightedGraph g = dumbbell(static_cast<int>(st.range(0)));
  const DinicEngine engine;
  const VertexSet u = VertexSet::full(g.n());
  for (auto _ : st) {
    FlowMeter m;
    benchmark::DoNotOptimize(unbalanced_case(engine, g, u, 8, m, mode(st)));
  }
}
BENCHMARK(BM_UnbalancedCase)->ArgsProduct({{64, 128}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_DetGlobal(benchmark::State& st) {
  const WeightedGraph g = gnp(static_cast<int>(st.range(0)));
  const DinicEngine engine;
  AlgoConfig cfg;
  cfg.phi = Ratio(1, 1);
  cfg.k = 8;
  cfg.exec = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(global_mincut_det(engine, g, cfg));
}
BENCHMARK(BM_DetGlobal)->ArgsProduct({{64, 128}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
