#include <benchmark/benchmark.h>

#include "bmf/centralizer.hpp"
#include "bmf/hurwitz.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

namespace {

Factorization smooth_cubic_factorization() {
  std::vector<Factor> fs;
  for (int k = 0; k < 3; ++k) {
    fs.push_back(Factor::half_twist(BraidWord(3), 1));
    fs.push_back(Factor::half_twist(BraidWord::from_ints(3, std::vector<int>{2, 1}), 1));
  }
  return Factorization(3, fs, true);
}

// Arg 0 is the thread count; 1 runs the serial kernel.
void BM_SearchEquivalence(benchmark::State& state) {
  const Factorization f = smooth_cubic_factorization();
  const Factorization g = scramble(f, 30, 7).factorization;
  SearchOptions opts;
  opts.budget = 20'000;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_equivalence(f, g, opts));
}
BENCHMARK(BM_SearchEquivalence)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumerateCommuting(benchmark::State& state) {
  EnumerateOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_commuting(4, 2, 6, opts));
}
BENCHMARK(BM_EnumerateCommuting)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BraidMonodromy(benchmark::State& state) {
  const BivariatePoly f = random_smooth_cubic(11);
  MonodromyOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(braid_monodromy(f, opts));
}
BENCHMARK(BM_BraidMonodromy)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
