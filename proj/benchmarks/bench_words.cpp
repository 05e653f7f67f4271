#include <benchmark/benchmark.h>

#include <string>

#include "flatavoid/spectrum.hpp"
#include "flatavoid/transforms.hpp"

namespace {

using namespace flatavoid;

// 2^r matrix products over unbounded integers; entry sizes grow with r.
void BM_distinct_sizes(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = distinct_sizes(r);
    benchmark::DoNotOptimize(rep.values);
  }
}
BENCHMARK(BM_distinct_sizes)->Arg(8)->Arg(12)->Arg(16);

void BM_word_matrix(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  std::string letters;
  for (std::size_t i = 0; i < len; ++i) letters += (i % 3 == 0) ? 'a' : 'b';
  const TransformWord w = TransformWord::parse(letters);
  for (auto _ : state) {
    auto m = word_matrix(w);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_word_matrix)->Arg(64)->Arg(256);

void BM_spectrum_exhaustive(benchmark::State& state) {
  for (auto _ : state) {
    auto res = spectrum_exhaustive(4, 2, 1);
    benchmark::DoNotOptimize(res.members);
  }
}
BENCHMARK(BM_spectrum_exhaustive);

void BM_avoider_search(benchmark::State& state) {
  for (auto _ : state) {
    auto res = exists_avoider_of_size(5, 3, 1, 12);
    benchmark::DoNotOptimize(res.nodes);
  }
}
BENCHMARK(BM_avoider_search);

}  // namespace

BENCHMARK_MAIN();
