#include <benchmark/benchmark.h>

#include <numeric>

#include "rsum/sumset.hpp"

namespace {

rsum::LatticeFamily interval_family(std::int64_t k, std::size_t n) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(k));
  std::iota(a.begin(), a.end(), 0);
  return rsum::LatticeFamily::repeated(rsum::make_int_set(a), n);
}

void BM_LinearDp(benchmark::State& state) {
  const auto f = interval_family(state.range(0), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rsum::linear_restricted_sumset(f));
}
BENCHMARK(BM_LinearDp)->Args({5, 5})->Args({8, 8})->Args({20, 12});

void BM_CyclicDp(benchmark::State& state) {
  const auto f = interval_family(state.range(0), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rsum::cyclic_restricted_sumset(f));
}
BENCHMARK(BM_CyclicDp)->Args({5, 5})->Args({8, 8})->Args({20, 12});

void BM_LinearOracle(benchmark::State& state) {
  const auto f = interval_family(state.range(0), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rsum::brute_force_oracle(f, rsum::SumsetKind::linear));
}
BENCHMARK(BM_LinearOracle)->Args({5, 5})->Args({8, 6});

void BM_DistinctDp(benchmark::State& state) {
  const auto f = interval_family(state.range(0), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rsum::distinct_sumset(f));
}
BENCHMARK(BM_DistinctDp)->Args({10, 4})->Args({16, 5});

void BM_PrimeFieldCyclic(benchmark::State& state) {
  const rsum::PrimeModulus p(state.range(0));
  std::vector<std::vector<std::int64_t>> sets(6);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::int64_t x = 0; x < p.value(); x += static_cast<std::int64_t>(i) + 2) sets[i].push_back(x);
  }
  const auto f = rsum::make_zp_family(p, sets);
  for (auto _ : state) benchmark::DoNotOptimize(rsum::cyclic_restricted_sumset(f));
}
BENCHMARK(BM_PrimeFieldCyclic)->Arg(31)->Arg(1009);

}  // namespace
