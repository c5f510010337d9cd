#include <memory>

#include <benchmark/benchmark.h>

#include "ballcover/exact.hpp"
#include "ballcover/linear_cover.hpp"
#include "ballcover/lp.hpp"
#include "ballcover/sparsify.hpp"

using namespace ballcover;

namespace {

BallSystem grid_system(int side, int radius) {
  return all_balls(std::make_shared<const Graph>(gen_family({Family::kGrid, side, side})), radius);
}

BallSystem broom_system(int k, int ell) {
  auto broom = gen_broom_counterexample(k, ell, 1);
  return all_balls(std::make_shared<const Graph>(std::move(broom.graph)), ell);
}

void BM_TauStar(benchmark::State& state) {
  const auto h = grid_system(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_tau_star(h).objective);
}
BENCHMARK(BM_TauStar)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_NuStar(benchmark::State& state) {
  const auto h = grid_system(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_nu_star(h).objective);
}
BENCHMARK(BM_NuStar)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ExactTau(benchmark::State& state) {
  const auto h = grid_system(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(exact_tau(h).size);
}
BENCHMARK(BM_ExactTau)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ExactTauBroom(benchmark::State& state) {
  const auto h = broom_system(6, 28);
  for (auto _ : state) benchmark::DoNotOptimize(exact_tau(h).size);
}
BENCHMARK(BM_ExactTauBroom)->Unit(benchmark::kMillisecond);

void BM_LinearCover(benchmark::State& state) {
  const auto h = grid_system(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(linear_cover(h, DensityProfile::planar(), 1).transversal.size());
}
BENCHMARK(BM_LinearCover)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_Degeneracy(benchmark::State& state) {
  const auto g = gen_family({Family::kRandomPlanar, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 1, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(degeneracy_ordering(g).degeneracy);
}
BENCHMARK(BM_Degeneracy)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
