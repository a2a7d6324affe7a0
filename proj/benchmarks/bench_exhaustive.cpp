#include <benchmark/benchmark.h>

#include "rsum/exhaustive.hpp"

namespace {

void BM_ThreeSet(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto patterns = rsum::three_set_patterns(p);
  for (auto _ : state) benchmark::DoNotOptimize(rsum::exhaustive_check(p, rsum::ExhaustiveCheck::three_set, patterns));
}
BENCHMARK(BM_ThreeSet)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_ThreeSetNoAffine(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto patterns = rsum::three_set_patterns(p);
  rsum::ExhaustiveOptions o;
  o.affine_reduction = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsum::exhaustive_check(p, rsum::ExhaustiveCheck::three_set, patterns, o));
  }
}
BENCHMARK(BM_ThreeSetNoAffine)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EvenCyclic(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto patterns = rsum::even_cyclic_patterns(p, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsum::exhaustive_check(p, rsum::ExhaustiveCheck::even_cyclic, patterns));
  }
}
BENCHMARK(BM_EvenCyclic)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_AffineOrbits(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsum::affine_orbit_representatives(static_cast<std::uint32_t>(state.range(0)), 5));
  }
}
BENCHMARK(BM_AffineOrbits)->Arg(13)->Arg(23);

}  // namespace
