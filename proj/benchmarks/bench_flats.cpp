#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "flatavoid/constructions.hpp"
#include "flatavoid/geometry.hpp"

namespace {

using namespace flatavoid;

PointSet random_set(int n, double fill, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(fill);
  PointSet s(n);
  for (std::uint32_t p = 0; p < (std::uint32_t{1} << n); ++p)
    if (keep(rng)) s.add(p);
  return s;
}

void BM_enumerate_flats(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    std::uint64_t seen = 0;
    enumerate_flats(n, k, [&](const Flat&) { ++seen; });
    benchmark::DoNotOptimize(seen);
  }
}
BENCHMARK(BM_enumerate_flats)->Args({6, 3})->Args({7, 3})->Args({8, 2});

// The profile scan is the cost center of every verification; threads split
// the walk by pivot set.
void BM_profile(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const PointSet s = random_set(7, 0.3, 0xfeed);
  ScanOptions opt;
  opt.threads = threads;
  for (auto _ : state) {
    auto prof = profile(s, 3, opt);
    benchmark::DoNotOptimize(prof);
  }
}
BENCHMARK(BM_profile)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_code_based_set(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  // Parity check of the [7,4] Hamming code; n = 14 at k = 3.
  const LinearCode c = LinearCode::from_generator(
      7, BitMatrix::from_strings({"1110100", "0111010", "0011101"}));
  for (auto _ : state) {
    auto s = code_based_set(c, 3, threads);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_code_based_set)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
