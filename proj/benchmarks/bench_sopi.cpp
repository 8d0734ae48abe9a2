#include <sopi/experiments.hpp>
#include <sopi/modarith.hpp>
#include <sopi/overlap.hpp>
#include <sopi/set_designer.hpp>

#include <benchmark/benchmark.h>

using namespace sopi;

namespace {

// Mersenne folding vs. a plain 64-bit remainder, on the same inputs.
void BM_mersenne_reduce(benchmark::State& state) {
  Rng rng(1);
  std::vector<std::uint64_t> xs(4096);
  for (auto& x : xs) x = rng.below(std::uint64_t{1} << 62);
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (auto x : xs) acc += mersenne_reduce(x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_mersenne_reduce);

void BM_generic_remainder(benchmark::State& state) {
  Rng rng(1);
  std::vector<std::uint64_t> xs(4096);
  for (auto& x : xs) x = rng.below(std::uint64_t{1} << 62);
  std::uint64_t n = kMersenne31;
  benchmark::DoNotOptimize(n);
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (auto x : xs) acc += x % n;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_generic_remainder);

void BM_symbol_stream(benchmark::State& state) {
  const auto f = FieldParams::make(static_cast<std::uint32_t>(state.range(0)));
  std::uint32_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mod_mul_add(12345, i, 678901, f));
    i = i + 1 == f.n() ? 0 : i + 1;
  }
}
BENCHMARK(BM_symbol_stream)->Arg(2147483647)->Arg(2147483629);

void BM_distance(benchmark::State& state) {
  const auto f = FieldParams::mersenne31();
  const DiffSet diff(static_cast<std::uint32_t>(state.range(0)));
  Rng rng(2);
  for (auto _ : state) {
    const auto b0 = static_cast<std::uint32_t>(rng.between(1, f.n() - 1));
    const auto b1 = static_cast<std::uint32_t>(rng.between(1, f.n() - 1));
    benchmark::DoNotOptimize(distance(b0, b1, diff, f));
  }
}
BENCHMARK(BM_distance)->Arg(1000)->Arg(30000);

void BM_build_b_set(benchmark::State& state) {
  const auto strategy = state.range(0) == 0 ? BuildStrategy::incremental : BuildStrategy::sieve;
  const auto design = DesignParams::make(FieldParams::make(10007), 5, 50);
  for (auto _ : state) benchmark::DoNotOptimize(build_b_set(design, 1u << 20, strategy));
}
BENCHMARK(BM_build_b_set)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_random_trial(benchmark::State& state) {
  const auto c = TrialConfig::make(FieldParams::mersenne31(), static_cast<std::uint64_t>(state.range(0)), 0.1, 4,
                                   SplitKind::random, 1, 3);
  std::uint64_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_random_trial(c, t++));
}
BENCHMARK(BM_random_trial)->Arg(1000)->Arg(50000);

}  // namespace
BENCHMARK_MAIN();
