#include <benchmark/benchmark.h>

#include "twave/reductions.hpp"

namespace twave {
namespace {

void BM_VerifyGridToAnd(benchmark::State& state) {
  Rng rng(4);
  const auto doc = make_document(RulesetId::TransverseWave, random_grid(rng, 3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(verify_reduction(doc, "grid_to_and"));
}
BENCHMARK(BM_VerifyGridToAnd);

void BM_VerifyNodeKayles(benchmark::State& state) {
  Rng rng(5);
  const auto doc = make_document(RulesetId::NodeKayles, random_graph(rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_reduction(doc, "node_kayles_to_demographic"));
}
BENCHMARK(BM_VerifyNodeKayles)->Arg(4)->Arg(6)->Arg(8);

void BM_SampledLattice(benchmark::State& state) {
  for (auto _ : state) {
    Rng rng(6);
    for (const auto& info : transformers()) benchmark::DoNotOptimize(verify_reduction(sample_source(info.name, rng), info.name));
  }
}
BENCHMARK(BM_SampledLattice);

}  // namespace
}  // namespace twave
BENCHMARK_MAIN();
