// Serial whole-range reference against the segmented OpenMP kernels.

#include <benchmark/benchmark.h>

#include "chebdense/arith_sieve.hpp"
#include "chebdense/density.hpp"
#include "chebdense/segment.hpp"

using namespace chebdense;

static void BM_SpfLambdaTable(benchmark::State& state) {
  const u64 limit = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    const SpfTable spf = build_spf(limit);
    benchmark::DoNotOptimize(build_lambda_table(spf, 2));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}

static void BM_Segment(benchmark::State& state) {
  const u64 limit = static_cast<u64>(state.range(0));
  const auto primes = primes_up_to(isqrt(limit));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_segment(2, limit, primes, 2));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}

static void BM_StreamReference(benchmark::State& state) {
  const u64 limit = static_cast<u64>(state.range(0));
  const GaloisContext ctx = cyclotomic_context(4);
  const PrimeClassifier classifier(ctx, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stream_sums_reference(2, limit, {}, &classifier));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}

static void BM_StreamParallel(benchmark::State& state) {
  const u64 limit = static_cast<u64>(state.range(0));
  const GaloisContext ctx = cyclotomic_context(4);
  const PrimeClassifier classifier(ctx, 0);
  StreamOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stream_sums(2, limit, {}, &classifier, options));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}

BENCHMARK(BM_SpfLambdaTable)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Segment)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StreamReference)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StreamParallel)
    ->Args({1 << 20, 1})
    ->Args({1 << 24, 1})
    ->Args({1 << 24, 0})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
