#include <benchmark/benchmark.h>

#include <random>

#include "quatmt/blaschke.hpp"
#include "quatmt/hardy.hpp"
#include "quatmt/mt_system.hpp"
#include "quatmt/projection.hpp"

using namespace quatmt;

namespace {

RegularSeries make_series(int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Quaternion> coeffs(static_cast<std::size_t>(degree) + 1);
  for (Quaternion& c : coeffs) c = {dist(rng), dist(rng), dist(rng), dist(rng)};
  return RegularSeries(std::move(coeffs));
}

void BM_StarProduct(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const RegularSeries f = make_series(degree, 1);
  const RegularSeries g = make_series(degree, 2);
  const int saved = max_truncation_degree();
  set_max_truncation_degree(degree);
  for (auto _ : state) {
    benchmark::DoNotOptimize(star_product(f, g));
  }
  set_max_truncation_degree(saved);
  state.SetComplexityN(degree);
}
BENCHMARK(BM_StarProduct)->RangeMultiplier(4)->Range(16, 2048)->Complexity();

void BM_RegularReciprocal(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const RegularSeries f{1.0, Quaternion{-0.3, 0.4, -0.2, 0.1}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(regular_reciprocal(f, degree));
  }
}
BENCHMARK(BM_RegularReciprocal)->RangeMultiplier(4)->Range(64, 1024);

void BM_BuildSystem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PoleSequence poles(std::vector<Quaternion>(static_cast<std::size_t>(n),
                                                   Quaternion{0.4, 0.3, 0.0, 0.0}),
                           UnitImaginary::i());
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_mt(poles, n, 256));
  }
}
BENCHMARK(BM_BuildSystem)->DenseRange(2, 8, 2);

void BM_GramQuadrature(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 0.8);
  std::vector<Quaternion> params;
  for (int k = 0; k < 8; ++k) {
    params.push_back(dist(rng) * exp_slice(dist(rng) * 7.0, UnitImaginary::i()));
  }
  const MTSystem sys = build_mt(PoleSequence(params, UnitImaginary::i()), 8, 256);
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gram_matrix(sys, GramMethod::quadrature, nodes));
  }
}
BENCHMARK(BM_GramQuadrature)->RangeMultiplier(2)->Range(256, 2048);

void BM_RegularCauchyEval(benchmark::State& state) {
  const RegularSeries f = make_series(32, 3);
  const SliceBoundaryGrid grid =
      SliceBoundaryGrid::sample_series(f, UnitImaginary::i(),
                                       static_cast<int>(state.range(0)));
  const Quaternion q{0.2, 0.1, 0.3, -0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(regular_cauchy_eval(grid, q));
  }
}
BENCHMARK(BM_RegularCauchyEval)->RangeMultiplier(2)->Range(512, 4096);

}  // namespace

BENCHMARK_MAIN();
