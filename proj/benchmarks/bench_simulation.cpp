#include <benchmark/benchmark.h>

#include "vacrad/simulation.hpp"

namespace {

vacrad::sim::SimConfig small_config(int particles, double packing) {
  vacrad::sim::SimConfig cfg;
  cfg.n_particles = particles;
  cfg.radius = 1.0;
  cfg.speed_scale = 1.0;
  const double volume =
      particles * (4.0 / 3.0) * 3.14159265358979323846;
  cfg.box_length = std::cbrt(volume / packing);
  cfg.seed = 7;
  cfg.mode = vacrad::sim::SimMode::twin;
  cfg.perturbation = 1e-9;
  cfg.max_collisions_per_particle = 4;
  return cfg;
}

void BM_TwinRunEvents(benchmark::State& state) {
  const auto cfg = small_config(static_cast<int>(state.range(0)), 0.02);
  for (auto _ : state) {
    auto result = vacrad::sim::run(cfg);
    benchmark::DoNotOptimize(result.collisions_elapsed);
    state.SetItemsProcessed(state.items_processed() +
                            2 * result.collisions_elapsed);
  }
}
BENCHMARK(BM_TwinRunEvents)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
