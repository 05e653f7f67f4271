#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "flatavoid/codes.hpp"
#include "flatavoid/gf2.hpp"

namespace {

using namespace flatavoid;

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, (rng() & 1) != 0);
  return m;
}

void BM_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BitMatrix m = random_matrix(n, n, 0xb17f10a7);
  for (auto _ : state) {
    auto r = rref(m);
    benchmark::DoNotOptimize(r.pivots);
  }
}
BENCHMARK(BM_rref)->Arg(32)->Arg(128)->Arg(512);

void BM_nullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BitMatrix m = random_matrix(n / 2, n, 0x5eed);
  for (auto _ : state) {
    auto b = nullspace_basis(m);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_nullspace)->Arg(64)->Arg(256);

// Gray-code codeword walk; dominated by 2^dim vector XORs.
void BM_weight_enumerator(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const LinearCode c =
      LinearCode::from_generator(2 * dim, random_matrix(dim, 2 * dim, 42));
  for (auto _ : state) {
    auto w = weight_enumerator_direct(c);
    benchmark::DoNotOptimize(w.coeffs);
  }
}
BENCHMARK(BM_weight_enumerator)->Arg(12)->Arg(16)->Arg(20);

void BM_macwilliams(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const LinearCode c =
      LinearCode::from_generator(len, random_matrix(len / 2, len, 7));
  const WeightEnumerator w = weight_enumerator_direct(c);
  for (auto _ : state) {
    auto d = macwilliams_transform(w, c.dimension());
    benchmark::DoNotOptimize(d.coeffs);
  }
}
BENCHMARK(BM_macwilliams)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
