#include <benchmark/benchmark.h>

#include "vacrad/gas_model.hpp"
#include "vacrad/quadrature.hpp"
#include "vacrad/unruh.hpp"

namespace {

void BM_BosePowerIntegralAdaptive(benchmark::State& state) {
  const double alpha = 2e12;
  for (auto _ : state) {
    auto r = vacrad::bose_power_integral(alpha, 8,
                                         vacrad::IntegralMethod::adaptive);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_BosePowerIntegralAdaptive);

void BM_RiemannZeta9(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(vacrad::riemann_zeta(9));
  }
}
BENCHMARK(BM_RiemannZeta9);

void BM_EstimatePipeline(benchmark::State& state) {
  const auto species = vacrad::builtin_species("N2");
  for (auto _ : state) {
    auto st = vacrad::derive_state(species, 273.15, 101325.0);
    auto est = vacrad::estimate_unruh(st);
    benchmark::DoNotOptimize(est.delta_theta0);
  }
}
BENCHMARK(BM_EstimatePipeline);

}  // namespace
