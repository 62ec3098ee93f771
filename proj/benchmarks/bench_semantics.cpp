#include <benchmark/benchmark.h>

#include "plp/answer_set.hpp"
#include "plp/semantics.hpp"
#include "support/chain.hpp"
#include "support/random_program.hpp"

using namespace plp;

namespace {

void BM_ChainIncremental(benchmark::State& state) {
  const auto p = PrioritizedProgram::build(testing::chain_program(static_cast<int>(state.range(0)) / 4));
  for (auto _ : state) benchmark::DoNotOptimize(wfs_pr(p, {Engine::incremental, Coherence::off, std::nullopt}));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(p.size()));
}
BENCHMARK(BM_ChainIncremental)->RangeMultiplier(2)->Range(64, 2048)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ChainDeclarative(benchmark::State& state) {
  const auto p = PrioritizedProgram::build(testing::chain_program(static_cast<int>(state.range(0)) / 4));
  for (auto _ : state) benchmark::DoNotOptimize(wfs_pr(p));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(p.size()));
}
BENCHMARK(BM_ChainDeclarative)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ChainWfsStar(benchmark::State& state) {
  const auto p = PrioritizedProgram::build(testing::chain_program(static_cast<int>(state.range(0)) / 4));
  for (auto _ : state) benchmark::DoNotOptimize(wfs_star(p));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(p.size()));
}
BENCHMARK(BM_ChainWfsStar)->RangeMultiplier(2)->Range(64, 2048)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ClosureAll(benchmark::State& state) {
  const auto p = PrioritizedProgram::build(testing::chain_program(static_cast<int>(state.range(0)) / 4));
  ClosureEngine engine(p);
  const RuleSet all = RuleSet::all(p.size());
  for (auto _ : state) {
    engine.run(all);
    benchmark::DoNotOptimize(engine.consistent());
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(p.size()));
}
BENCHMARK(BM_ClosureAll)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

void BM_RandomAnswerSets(benchmark::State& state) {
  testing::RandomProgram gen(1);
  std::vector<PrioritizedProgram> programs;
  for (int i = 0; i < 50; ++i) programs.push_back(PrioritizedProgram::build(gen.next()));
  for (auto _ : state)
    for (const auto& p : programs) benchmark::DoNotOptimize(analyze_answer_sets(p));
}
BENCHMARK(BM_RandomAnswerSets)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
