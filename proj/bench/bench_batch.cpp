// Serial vs OpenMP batch runner on a small mixed suite.

#include <benchmark/benchmark.h>

#include "pac/batch.hpp"

namespace {

std::vector<pac::Job> make_jobs(double duration) {
  std::vector<pac::ExperimentConfig> cfgs;
  const std::vector<pac::TrajectorySpec> refs{pac::Constant{4.0}, pac::SharpSteps{},
                                              pac::SmoothSteps{}, pac::SumOfSines{},
                                              pac::Staircase{}, pac::Step{}};
  for (const auto& r : refs) {
    pac::ExperimentConfig c;
    c.trajectory = r;
    c.duration = duration;
    c.pac.output_limit = c.command_limit();
    cfgs.push_back(c);
  }
  return pac::expand_jobs(cfgs);
}

void BM_BatchSerial(benchmark::State& state) {
  const auto jobs = make_jobs(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pac::run_batch_serial(jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(jobs.size()));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto jobs = make_jobs(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pac::run_batch_parallel(jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(jobs.size()));
}

}  // namespace

BENCHMARK(BM_BatchSerial)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
