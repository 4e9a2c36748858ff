#include <benchmark/benchmark.h>

#include <cmath>

#include "casimir_knob/analysis.hpp"
#include "casimir_knob/catalog.hpp"
#include "casimir_knob/presets.hpp"
#include "casimir_knob/sweep.hpp"

using namespace casimir_knob;

namespace {

void BM_Quadrature(benchmark::State& state) {
  QuadratureSpec spec;
  spec.rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  spec.scale_hint = 1.0;
  for (auto _ : state) {
    auto r = integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x) * std::exp(-x / 50); }, spec);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_Quadrature)->Arg(6)->Arg(10)->Arg(13);

void BM_DipoleForce(benchmark::State& state) {
  const auto& cs = find_atom("Cs");
  const auto& au = find_material("Au");
  const auto g = Geometry::make(60e-9, static_cast<double>(state.range(0)) * 1e-9);
  for (auto _ : state) benchmark::DoNotOptimize(dispersion_force_dipole(cs, au, g).value);
}
BENCHMARK(BM_DipoleForce)->Arg(100)->Arg(700)->Arg(5000);

void BM_MultipoleForce(benchmark::State& state) {
  const auto& cs = find_atom("Cs");
  const auto& sio2 = find_material("SiO2");
  const auto g = Geometry::make(60e-9, static_cast<double>(state.range(0)) * 1e-9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dispersion_multipole_nr(cs, sio2, g, MultipoleOptions{}).force.value);
  }
}
BENCHMARK(BM_MultipoleForce)->Arg(5)->Arg(20)->Arg(100);

void BM_CriticalField(benchmark::State& state) {
  const auto& h = find_atom("H");
  const auto& au = find_material("Au");
  const auto g = Geometry::make(60e-9, 740e-9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(critical_field(h, au, g, std::acos(0.0), DispersionMethod::dipole_full()));
  }
}
BENCHMARK(BM_CriticalField);

void BM_FigureSweep(benchmark::State& state) {
  auto cfg = figure_preset(static_cast<int>(state.range(0))).panels.front().config;
  cfg.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg).rows.size());
}
BENCHMARK(BM_FigureSweep)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
