#include <benchmark/benchmark.h>

#include "rsum/poly.hpp"

namespace {

void BM_CyclePolynomial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rsum::cycle_polynomial(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CyclePolynomial)->Arg(8)->Arg(12);

void BM_LTransform(benchmark::State& state) {
  const auto p = rsum::cycle_polynomial(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rsum::l_transform(p));
}
BENCHMARK(BM_LTransform)->Arg(8)->Arg(12);

void BM_Extraction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::uint32_t>(state.range(1));
  const auto p = rsum::cycle_polynomial(n);
  const rsum::Exponents target(n, k);
  for (auto _ : state) benchmark::DoNotOptimize(rsum::coeff_of_product_with_linear_power(p, target));
}
BENCHMARK(BM_Extraction)->Args({4, 5})->Args({8, 5})->Args({12, 8});

void BM_ClosedForm(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto k = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rsum::even_cycle_coefficient(n, k));
}
BENCHMARK(BM_ClosedForm)->Args({8, 5})->Args({12, 8});

void BM_IdentityCheck(benchmark::State& state) {
  const auto p = rsum::path_polynomial(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rsum::l_identity_check(p, 4));
}
BENCHMARK(BM_IdentityCheck)->Arg(5)->Arg(9);

}  // namespace
