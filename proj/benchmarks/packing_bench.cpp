#include <benchmark/benchmark.h>

#include "oddjoin/enumerate.hpp"
#include "oddjoin/obstructions.hpp"
#include "oddjoin/packing.hpp"

using namespace oddjoin;

static void BM_TauK5Tilde(benchmark::State& state) {
  const SignedGraft sg = build_k5tilde();
  for (auto _ : state) benchmark::DoNotOptimize(tau(sg).value);
}
BENCHMARK(BM_TauK5Tilde);

static void BM_TauK5TildeExhaustive(benchmark::State& state) {
  const SignedGraft sg = build_k5tilde();
  for (auto _ : state) benchmark::DoNotOptimize(tau(sg, Oracle::kExhaustive).value);
}
BENCHMARK(BM_TauK5TildeExhaustive);

static void BM_NuF7(benchmark::State& state) {
  const SignedGraft sg = build_f7();
  for (auto _ : state) benchmark::DoNotOptimize(nu(sg).value);
}
BENCHMARK(BM_NuF7);

static void BM_NustarK5Tilde(benchmark::State& state) {
  const SignedGraft sg = build_k5tilde();
  for (auto _ : state) benchmark::DoNotOptimize(nustar(sg));
}
BENCHMARK(BM_NustarK5Tilde)->Unit(benchmark::kMillisecond);

// random grafts with n vertices and 2n edges
static void BM_PacksRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grafts = generate_random(n, 2 * n, TMode::kBoth, 7, 32);
  for (auto _ : state) {
    for (const SignedGraft& sg : grafts) benchmark::DoNotOptimize(packs(sg).packs);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grafts.size()));
}
BENCHMARK(BM_PacksRandom)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Generate(benchmark::State& state) {
  const GenerateBounds bounds{.n_min = 1, .n_max = 4, .m_min = 0, .m_max = static_cast<int>(state.range(0)),
                              .t_mode = TMode::kBoth};
  for (auto _ : state) benchmark::DoNotOptimize(generate(bounds).size());
}
BENCHMARK(BM_Generate)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
