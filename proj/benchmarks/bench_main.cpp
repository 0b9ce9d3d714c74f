#include <benchmark/benchmark.h>

#include <cmath>
#include <cstddef>
#include <memory>
#include <numbers>

#include "sdelab/besov.hpp"
#include "sdelab/brownian.hpp"
#include "sdelab/drift.hpp"
#include "sdelab/random.hpp"
#include "sdelab/scheme.hpp"
#include "sdelab/zvonkin.hpp"

using namespace sdelab;

namespace {

MollifiedDrift distributional(std::size_t points, std::size_t m) {
  DriftSpec spec;
  spec.kind = DriftKind::distributional_derivative;
  spec.beta = 0.1;
  return mollify(spec, m, SpectralGrid(16.0, points));
}

void BM_DriftEvaluate(benchmark::State& state) {
  const auto bm = distributional(16384, 64);
  double x = -3.0, acc = 0.0;
  for (auto _ : state) {
    acc += bm.evaluate(0.5, x);
    x += 0.0137;
    if (x > 3.0) x = -3.0;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_DriftEvaluate);

void BM_CounterNormal(benchmark::State& state) {
  std::uint64_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(counter_normal(1, 2, k++));
}
BENCHMARK(BM_CounterNormal);

void BM_GeneratePath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t p = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_path(1, p++, 1.0, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GeneratePath)->Arg(1024)->Arg(8192);

void BM_EulerPath(benchmark::State& state) {
  const auto bm = distributional(16384, 64);
  const auto w = generate_path(1, 0, 1.0, 8192);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(euler_maruyama(bm, w, n, 0.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EulerPath)->Arg(512)->Arg(8192);

void BM_BesovNorm(benchmark::State& state) {
  const SpectralGrid grid(16.0, static_cast<std::size_t>(state.range(0)));
  const auto f = build_drift(DriftSpec{.kind = DriftKind::distributional_derivative}, grid);
  for (auto _ : state) benchmark::DoNotOptimize(besov_norm(f, -0.3));
}
BENCHMARK(BM_BesovNorm)->Arg(1024)->Arg(16384);

void BM_SolveMild(benchmark::State& state) {
  const auto bm = distributional(static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) benchmark::DoNotOptimize(solve_mild(bm, 8.0, PdeOptions{}));
}
BENCHMARK(BM_SolveMild)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_ZvonkinInverse(benchmark::State& state) {
  const auto bm = distributional(4096, 16);
  const ZvonkinPair zp(std::make_shared<MildSolution>(tune_lambda(bm, PdeOptions{})));
  double y = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zp.psi(0.3, y));
    y += 0.011;
    if (y > 2.0) y = -2.0;
  }
}
BENCHMARK(BM_ZvonkinInverse);

}  // namespace

BENCHMARK_MAIN();
