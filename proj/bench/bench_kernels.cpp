#include <benchmark/benchmark.h>

#include "ordercheck/integral.hpp"
#include "ordercheck/search.hpp"

using namespace ordercheck;

namespace {

const OddConvexCombination kPhis[] = {OddConvexCombination::exp_diff(), OddConvexCombination::monomial(3)};

InstanceSource scan_source(benchmark::State& state) {
  const auto dist = state.range(1) ? Distribution::kGaussianReal : Distribution::kUniformGridRational;
  return InstanceSource::random(2, 30, static_cast<std::size_t>(state.range(0)), 11, dist);
}

void BM_ScanSerial(benchmark::State& state) {
  const auto source = scan_source(state);
  ScanOptions options;
  options.budget = source.size();
  for (auto _ : state) benchmark::DoNotOptimize(scan_serial(source, kPhis, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto source = scan_source(state);
  ScanOptions options;
  options.budget = source.size();
  for (auto _ : state) benchmark::DoNotOptimize(scan(source, kPhis, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<std::int64_t> n_list(std::int64_t top) {
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 10; n <= top; n *= 2) ns.push_back(n);
  return ns;
}

MonotoneFunctionSpec affine_half() {
  AnalyticFn f;
  f.shift = Rational(-1, 2);
  return MonotoneFunctionSpec(f);
}

void BM_ConvergenceSerial(benchmark::State& state) {
  const auto f = affine_half();
  const auto ns = n_list(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convergence_study_serial(f, kPhis[0], ns));
}

void BM_ConvergenceParallel(benchmark::State& state) {
  const auto f = affine_half();
  const auto ns = n_list(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convergence_study(f, kPhis[0], ns));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Args({2000, 0})->Args({2000, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Args({2000, 0})->Args({2000, 1})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ConvergenceSerial)->Arg(5120)->Arg(20480)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvergenceParallel)->Arg(5120)->Arg(20480)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
