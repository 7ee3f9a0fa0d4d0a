#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "wavebc/branch.hpp"
#include "wavebc/fd_solver.hpp"
#include "wavebc/manufactured.hpp"
#include "wavebc/scalar_bc.hpp"
#include "wavebc/system_symbol.hpp"

namespace {

using namespace wavebc;

void BM_LeapfrogStep(benchmark::State& state) {
  const Grid2D grid = Grid2D::from_n(static_cast<int>(state.range(0)));
  const BoundaryCoefficient bc = state.range(1) == 0 ? BoundaryCoefficient::real(0.5)
                                                     : BoundaryCoefficient::imaginary(0.5);
  Simulation sim(grid, bc, ManufacturedSolution::gaussian_pulse().problem(bc, grid));
  for (auto _ : state) benchmark::DoNotOptimize(sim.step());
  state.SetItemsProcessed(state.iterations() * grid.n * grid.n * bc.components());
}
BENCHMARK(BM_LeapfrogStep)->ArgsProduct({{101, 201, 401}, {0, 1}});

void BM_ForcedTravelingWaveStep(benchmark::State& state) {
  const Grid2D grid = Grid2D::from_n(static_cast<int>(state.range(0)));
  const BoundaryCoefficient bc = BoundaryCoefficient::imaginary(0.5);
  Simulation sim(grid, bc, ManufacturedSolution::traveling_wave().problem(bc, grid));
  for (auto _ : state) benchmark::DoNotOptimize(sim.step());
  state.SetItemsProcessed(state.iterations() * grid.n * grid.n * 2);
}
BENCHMARK(BM_ForcedTravelingWaveStep)->Arg(101)->Arg(401);

void BM_Kappa(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<DualPoint> pts;
  for (int i = 0; i < 1024; ++i) pts.push_back({{std::abs(g(rng)), g(rng)}, g(rng)});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kappa(pts[i++ & 1023]));
  }
}
BENCHMARK(BM_Kappa);

void BM_EigenvalueSearch(benchmark::State& state) {
  const ScalarBC bc = ScalarBC::type2(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalue_search(bc, 32));
}
BENCHMARK(BM_EigenvalueSearch)->Unit(benchmark::kMillisecond);

void BM_EigenSplit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Eigen::MatrixXd a1 = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    a1(i, i) = 1.0 + 0.3 * i;
    b(i, i) = 2.0 - 0.2 * i;
    if (i + 1 < n) b(i, i + 1) = b(i + 1, i) = 0.1;
  }
  const SystemSpec sys = SystemSpec::make(a1, {b});
  const std::vector<double> om{0.7};
  const FirstOrderSymbol sym = build_first_order_symbol(sys, cdouble(0.2, 0.9), om);
  for (auto _ : state) benchmark::DoNotOptimize(eigen_split(sym));
}
BENCHMARK(BM_EigenSplit)->Arg(2)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
