#include <benchmark/benchmark.h>

#include <cmath>

#include "d2dcell/mode_selection.hpp"
#include "d2dcell/network_params.hpp"
#include "d2dcell/outage_rate.hpp"
#include "d2dcell/power_distributions.hpp"
#include "d2dcell/quadrature.hpp"
#include "d2dcell/simulation.hpp"
#include "d2dcell/special_functions.hpp"

namespace {

d2dcell::NetworkParams reference() { return d2dcell::NetworkParams{}; }

void BM_LowerIncompleteGamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d2dcell::lower_incomplete_gamma(1.5, x));
    x = x < 30.0 ? x * 1.7 : 0.1;
  }
}
BENCHMARK(BM_LowerIncompleteGamma);

void BM_PathlossTailIntegral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(d2dcell::integrate_semi_infinite(
        [](double y) { return y / (std::pow(y, 3.7) + 1.0); }, 0.8));
  }
}
BENCHMARK(BM_PathlossTailIntegral);

void BM_ModeSelection(benchmark::State& state) {
  const auto params = reference();
  for (auto _ : state) {
    benchmark::DoNotOptimize(d2dcell::mode_selection_probability(params));
  }
}
BENCHMARK(BM_ModeSelection);

void BM_CellularPowerMoment(benchmark::State& state) {
  const auto params = reference();
  for (auto _ : state) {
    benchmark::DoNotOptimize(d2dcell::cellular_power_moment(0.5, params));
  }
}
BENCHMARK(BM_CellularPowerMoment);

void BM_CellularOutageClosedForm(benchmark::State& state) {
  const auto params = reference();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        d2dcell::cellular_outage(params, d2dcell::LtRoute::closed_form).outage_probability);
  }
}
BENCHMARK(BM_CellularOutageClosedForm);

void BM_CellularOutageQuadrature(benchmark::State& state) {
  const auto params = reference();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        d2dcell::cellular_outage(params, d2dcell::LtRoute::quadrature).outage_probability);
  }
}
BENCHMARK(BM_CellularOutageQuadrature);

void BM_LinkCapacityCellular(benchmark::State& state) {
  const auto params = reference();
  for (auto _ : state) {
    benchmark::DoNotOptimize(d2dcell::link_capacity(d2dcell::LinkMode::cellular, params));
  }
}
BENCHMARK(BM_LinkCapacityCellular);

void BM_RealizeNetwork(benchmark::State& state) {
  const auto params = reference();
  d2dcell::SimulationConfig config;
  config.window_side_m = 10000.0;
  config.num_realizations = 1;
  std::uint64_t stream = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d2dcell::realize_network(params, config, stream++));
  }
}
BENCHMARK(BM_RealizeNetwork)->Unit(benchmark::kMillisecond);

void BM_RealizationPipeline(benchmark::State& state) {
  const auto params = reference();
  d2dcell::SimulationConfig config;
  config.window_side_m = 10000.0;
  config.num_realizations = 1;
  std::uint64_t stream = 0;
  for (auto _ : state) {
    auto r = d2dcell::realize_network(params, config, stream++);
    d2dcell::classify_and_schedule(r, params);
    benchmark::DoNotOptimize(d2dcell::measure(r, params, config, {}));
  }
}
BENCHMARK(BM_RealizationPipeline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
