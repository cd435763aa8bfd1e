#include <random>

#include <benchmark/benchmark.h>

#include "fent/criteria.hpp"
#include "fent/linalg.hpp"
#include "fent/scanner.hpp"
#include "fent/states.hpp"

namespace {

using namespace fent;

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  return (g + g.adjoint()).scaled(0.5);
}

void BM_HermitianEig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const ComplexMatrix h = random_hermitian(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->Arg(6)->Arg(15)->Arg(20)->Arg(36);

void BM_WernerConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(werner_state(0.5));
}
BENCHMARK(BM_WernerConstruction);

void BM_FullIndicators(benchmark::State& state) {
  const DensityMatrix rho = werner_state(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(d_von_neumann(rho));
    benchmark::DoNotOptimize(d_linear(rho));
    benchmark::DoNotOptimize(r_infinity(rho));
  }
}
BENCHMARK(BM_FullIndicators);

void BM_FindThreshold(benchmark::State& state) {
  const StateFamily family = [](double p) { return werner_state(p); };
  for (auto _ : state)
    benchmark::DoNotOptimize(find_threshold("werner", family, Indicator::r_inf(), 1e-2));
}
BENCHMARK(BM_FindThreshold);

void BM_GeneralWerner3Fermions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(general_werner(3, 2, 0.5));
}
BENCHMARK(BM_GeneralWerner3Fermions);

} // namespace

BENCHMARK_MAIN();
