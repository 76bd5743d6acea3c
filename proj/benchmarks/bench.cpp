#include <benchmark/benchmark.h>

#include <random>

#include "lpk/adapted.hpp"
#include "lpk/coefficients.hpp"
#include "lpk/fourier.hpp"
#include "lpk/maximal.hpp"
#include "lpk/paraproduct.hpp"
#include "lpk/rearrange.hpp"
#include "lpk/square.hpp"

namespace {

lpk::GridFunction noise(std::vector<int> L, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  lpk::GridFunction f = lpk::GridFunction::zeros(L);
  for (auto& v : f.values()) v = lpk::cplx(g(rng), g(rng));
  return f;
}

void BM_Transform(benchmark::State& state) {
  const lpk::GridFunction f = noise({static_cast<int>(state.range(0))}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(lpk::fourier_coefficients(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Transform)->DenseRange(8, 13, 1);

void BM_HardyLittlewood(benchmark::State& state) {
  const lpk::GridFunction f = noise({static_cast<int>(state.range(0))}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lpk::maximal(f, lpk::MaximalKind::hl()));
}
BENCHMARK(BM_HardyLittlewood)->DenseRange(8, 11, 1)->Unit(benchmark::kMillisecond);

void BM_DyadicMaximal(benchmark::State& state) {
  const lpk::GridFunction f = noise({static_cast<int>(state.range(0))}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lpk::maximal(f, lpk::MaximalKind::dyadic()));
}
BENCHMARK(BM_DyadicMaximal)->DenseRange(8, 13, 1);

void BM_SquareFunction(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const lpk::AdaptedFamily fam = lpk::make_adapted_family(lpk::FamilyKind::from_pou_1, L - 3, L);
  const lpk::GridFunction f = noise({L}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(lpk::square_function(f, fam));
}
BENCHMARK(BM_SquareFunction)->DenseRange(8, 13, 1)->Unit(benchmark::kMicrosecond);

void BM_Paraproduct2D(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0)), K = L - 3;
  lpk::ParaproductSpec spec;
  spec.params = 2;
  for (auto kind : {lpk::FamilyKind::low_pass, lpk::FamilyKind::from_pou_1, lpk::FamilyKind::from_pou_2}) {
    spec.x.push_back(lpk::make_adapted_family(kind, K, L));
    spec.y.push_back(lpk::make_adapted_family(kind, K, L));
  }
  spec.rect_eps = lpk::RectEpsilon::rademacher(K, K, 5);
  const lpk::GridFunction f = noise({L, L}, 6), g = noise({L, L}, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lpk::paraproduct_2p(spec, f, g));
}
BENCHMARK(BM_Paraproduct2D)->DenseRange(6, 8, 1)->Unit(benchmark::kMillisecond);

void BM_Zygmund(benchmark::State& state) {
  const lpk::GridFunction f = noise({static_cast<int>(state.range(0))}, 8);
  const auto method = state.range(1) ? lpk::ZygmundMethod::iterated : lpk::ZygmundMethod::closed_form;
  for (auto _ : state) benchmark::DoNotOptimize(lpk::zygmund_norm(f, 2, method));
}
BENCHMARK(BM_Zygmund)->ArgsProduct({{10, 13}, {0, 1}})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
