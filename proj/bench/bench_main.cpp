// Serial reference paths against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "dac/backends/mock_backend.hpp"
#include "dac/bsi/bsi.hpp"
#include "dac/eval/experiment.hpp"

namespace {

using namespace dac;

void BM_BsiSolve(benchmark::State& state, bsi::Exec exec) {
  const auto base = bsi::random_tree(static_cast<std::size_t>(state.range(0)), 11);
  const auto pattern = bsi::random_tree(5, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bsi::bsi_solve(pattern, base, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BsiMerge(benchmark::State& state, bsi::Exec exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto base = bsi::random_tree(n, 21);
  const bsi::ColoredTree pattern({{2, 3, 1}, {0, 0, 0}, {0, 0, 1}}, 1);
  const auto left = bsi::bsi_tackle({2, base.root(), 0}, pattern, base);
  const auto right = bsi::bsi_tackle({3, base.root(), 0}, pattern, base);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bsi::bsi_merge({1, base.root(), 0}, pattern, base, left, right, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Experiment(benchmark::State& state) {
  eval::MultiplicationDataset ds{tasks::gen_instances(64, 8, 5)};
  backends::MockBackend mock;
  core::SolverConfig config;
  config.parallelism = 4;
  eval::ExperimentOptions options;
  options.instance_parallelism = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eval::run_experiment(ds, core::Strategy::dac_multi, mock, config, options));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_BsiSolve, serial, dac::bsi::Exec::serial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_BsiSolve, parallel, dac::bsi::Exec::parallel)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_BsiMerge, serial, dac::bsi::Exec::serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK_CAPTURE(BM_BsiMerge, parallel, dac::bsi::Exec::parallel)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Experiment)->Arg(1)->Arg(4)->UseRealTime();
BENCHMARK_MAIN();
