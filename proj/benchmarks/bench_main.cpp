#include <benchmark/benchmark.h>

#include "cpotts/bilateral.hpp"
#include "cpotts/hypergeometric.hpp"
#include "cpotts/identities.hpp"
#include "cpotts/transfer.hpp"

namespace {

std::vector<cpotts::Rapidity> triple(int N) {
  cpotts::RapiditySampler s(42, cpotts::modulus_from_k(0.6), cpotts::UnityContext(N));
  return s.next_family(3);
}

void BM_LogGamma(benchmark::State& state) {
  cpotts::Complex z(0.3, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cpotts::log_gamma(z));
    z += 1e-9;
  }
}
BENCHMARK(BM_LogGamma);

void BM_StarTriangleConstant(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const cpotts::UnityContext ctx(N);
  const auto f = triple(N);
  for (auto _ : state) benchmark::DoNotOptimize(cpotts::star_triangle_constant(f[0], f[1], f[2], ctx));
}
BENCHMARK(BM_StarTriangleConstant)->DenseRange(2, 6);

void BM_Commutation(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const int L = static_cast<int>(state.range(1));
  const cpotts::UnityContext ctx(N);
  const auto f = triple(N);
  for (auto _ : state) benchmark::DoNotOptimize(cpotts::check_commutation(f[0], f[1], f[2], L, ctx));
}
BENCHMARK(BM_Commutation)->Args({2, 4})->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_Phi21(benchmark::State& state) {
  const cpotts::UnityContext ctx(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  const auto t = cpotts::sample_cyclic_triple(rng, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(cpotts::phi21(t.x, t.y, t.z, ctx));
}
BENCHMARK(BM_Phi21)->Arg(3)->Arg(8);

void BM_BilateralSum(benchmark::State& state) {
  const auto spec = cpotts::solve_bilateral_params(7);
  for (auto _ : state) benchmark::DoNotOptimize(cpotts::bilateral_lhs(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BilateralSum)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
