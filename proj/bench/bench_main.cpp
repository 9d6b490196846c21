// Parallel vs serial Rips construction, and engine configurations.
#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pcoh/engine.hpp"
#include "pcoh/rips.hpp"

namespace {

pcoh::point_cloud torus_points(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  pcoh::point_cloud pc(3);
  for (std::size_t i = 0; i < n; ++i) {
    double u = angle(rng), v = angle(rng);
    std::vector<double> p{(2 + std::cos(v)) * std::cos(u), (2 + std::cos(v)) * std::sin(u), std::sin(v)};
    pc.add(p);
  }
  return pc;
}

void rips_parallel(benchmark::State& state) {
  auto pc = torus_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pcoh::build_rips(pc, 0.9, 3).size());
}

void rips_serial(benchmark::State& state) {
  auto pc = torus_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pcoh::build_rips_serial(pc, 0.9, 3).size());
}

void engine(benchmark::State& state) {
  auto c = pcoh::build_rips(torus_points(400), 0.9, 3);
  pcoh::engine_options o;
  o.lazy = state.range(0) != 0;
  o.reorder = state.range(1) != 0;
  pcoh::prime_field f(2);
  for (auto _ : state) benchmark::DoNotOptimize(pcoh::compute_persistence(c, f, o).diagram.pairs.size());
  state.counters["simplices"] = static_cast<double>(c.size());
}

}  // namespace

BENCHMARK(rips_parallel)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(rips_serial)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(engine)->ArgsProduct({{0, 1}, {0, 1}})->ArgNames({"lazy", "reorder"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
