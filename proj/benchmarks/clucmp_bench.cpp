#include <benchmark/benchmark.h>

#include "clucmp/affinity.hpp"
#include "clucmp/baselines.hpp"
#include "clucmp/elementsim.hpp"
#include "clucmp/measures.hpp"
#include "clucmp/synthgen.hpp"

namespace {

using namespace clucmp;

void BM_PartitionElementScores(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto a = equal_partition(n, 32);
  const auto b = random_partition(n, 32, rng);
  for (auto _ : state) benchmark::DoNotOptimize(partition_element_scores(a, b).scores.data());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_PartitionElementScores)->RangeMultiplier(4)->Range(256, 16384);

void BM_NumericElementScores(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = binary_hierarchy(4, n / 16);
  const auto flat = level_slice(h, 3);
  SimilarityOptions opts;
  opts.method = PprMethod::Numeric;
  for (auto _ : state) benchmark::DoNotOptimize(element_scores(h, flat, opts).scores.data());
}
BENCHMARK(BM_NumericElementScores)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_PprDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto c = random_partition(n, n / 8, rng);
  const auto w = project_element_graph(build_affiliation(c));
  for (auto _ : state) benchmark::DoNotOptimize(ppr_solve(w, 0.9, 0).p.data());
}
BENCHMARK(BM_PprDense)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_PprPowerIteration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const auto c = random_partition(n, n / 8, rng);
  const auto w = project_element_graph(build_affiliation(c));
  for (auto _ : state) benchmark::DoNotOptimize(ppr_power_iteration(w, 0.9, 0).p.data());
}
BENCHMARK(BM_PprPowerIteration)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Contingency(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  const auto a = random_partition(n, 32, rng);
  const auto b = random_partition(n, 64, rng);
  for (auto _ : state) benchmark::DoNotOptimize(contingency(a, b).counts.data());
}
BENCHMARK(BM_Contingency)->RangeMultiplier(4)->Range(256, 16384);

void BM_AllBaselines(benchmark::State& state) {
  Rng rng(5);
  const auto a = equal_partition(1024, 32);
  const auto b = random_partition(1024, 32, rng);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_many(all_measures(), a, b).data());
}
BENCHMARK(BM_AllBaselines);

}  // namespace

BENCHMARK_MAIN();
