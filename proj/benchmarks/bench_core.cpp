#include <benchmark/benchmark.h>

#include <cmath>

#include "nled/constitutive.hpp"
#include "nled/energetics.hpp"
#include "nled/radial_soliton.hpp"
#include "nled/series_expansion.hpp"
#include "nled/verification.hpp"

namespace {

constexpr double kE = 4.77e-10;
constexpr double kR0 = 2.28e-13;

const nled::LagrangianModel& born_infeld() {
  static const auto m = nled::LagrangianModel::born_infeld(kE / (kR0 * kR0));
  return m;
}

void BM_InvertBornInfeld(benchmark::State& state) {
  const auto m = nled::LagrangianModel::born_infeld(1.0);
  const double D = std::pow(10.0, double(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nled::field_from_displacement(m, D).E);
}
BENCHMARK(BM_InvertBornInfeld)->DenseRange(-6, 6, 3);

void BM_InvertLog(benchmark::State& state) {
  const auto m = nled::LagrangianModel::log_schroedinger(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(nled::field_from_displacement(m, 0.49).E);
}
BENCHMARK(BM_InvertLog);

void BM_FieldProfile(benchmark::State& state) {
  const auto grid = nled::RadialGrid::log_spaced(1e-3 * kR0, 1e3 * kR0, std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nled::field_profile(born_infeld(), kE, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FieldProfile)->Arg(400)->Arg(4000);

void BM_ChargeDensity(benchmark::State& state) {
  const auto grid = nled::RadialGrid::log_spaced(1e-4 * kR0, 1e4 * kR0, std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nled::charge_density_profile(born_infeld(), kE, grid));
}
BENCHMARK(BM_ChargeDensity)->Arg(400)->Arg(4000);

void BM_SolveSoliton(benchmark::State& state) {
  const auto grid = nled::RadialGrid::log_spaced(1e-4 * kR0, 1e4 * kR0, 400);
  for (auto _ : state) benchmark::DoNotOptimize(nled::solve_soliton(born_infeld(), kE, grid).phi.back());
}
BENCHMARK(BM_SolveSoliton)->Unit(benchmark::kMillisecond);

void BM_TotalEnergy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nled::total_energy(born_infeld(), kE).U);
}
BENCHMARK(BM_TotalEnergy)->Unit(benchmark::kMicrosecond);

void BM_StressIntegrals(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nled::stress_integrals(born_infeld(), kE).laue_trace);
}
BENCHMARK(BM_StressIntegrals)->Unit(benchmark::kMicrosecond);

void BM_TaylorFit(benchmark::State& state) {
  const auto m = nled::LagrangianModel::born_infeld(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(nled::estimate_taylor_coefficients(m, 1e-2).c02_hat);
}
BENCHMARK(BM_TaylorFit);

void BM_InvariantSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nled::run_invariant_suite(10000, 1000, 7).max_rel_err_fierz);
}
BENCHMARK(BM_InvariantSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
