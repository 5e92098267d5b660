#include <benchmark/benchmark.h>

#include "qmzv/constructor.hpp"
#include "qmzv/genfun.hpp"
#include "qmzv/models.hpp"
#include "qmzv/verify.hpp"

using namespace qmzv;

static void BM_DaggerFinite(benchmark::State& state) {
  const BarIndex k({0, 2, 0, 1, 3});
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_dagger_finite(k, {0, N, 30}));
}
BENCHMARK(BM_DaggerFinite)->Arg(8)->Arg(16)->Arg(32);

static void BM_DiamondBZFinite(benchmark::State& state) {
  const Index k{1, 1, 2, 1, 3};
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_diamond_finite(DiamondVariant::BZ, k, {0, N, 30}));
}
BENCHMARK(BM_DiamondBZFinite)->Arg(8)->Arg(16)->Arg(32);

static void BM_DaggerInfinite(benchmark::State& state) {
  const BarIndex k({0, 0, 2, 3});
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_dagger_infinite(k, order));
}
BENCHMARK(BM_DaggerInfinite)->Arg(20)->Arg(40)->Arg(80);

static void BM_RationalPoint(benchmark::State& state) {
  const BarIndex k({1, 2, 1, 2});
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_at_rational_q(FiniteModel::DiamondBZ, k, N, Rational(2, 3)));
}
BENCHMARK(BM_RationalPoint)->Arg(8)->Arg(16);

static void BM_ConstructorCold(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  const auto indices = pair_indices_up_to(total);
  for (auto _ : state) {
    clear_constructor_cache();
    for (const auto& c : indices) benchmark::DoNotOptimize(D_q(c));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(indices.size()));
}
BENCHMARK(BM_ConstructorCold)->Arg(6)->Arg(8)->Arg(10);

static void BM_ZMapWordsCold(benchmark::State& state) {
  const PairIndex c({2, 3, 1, 2});
  const AlgebraElement d = D_q(c);
  for (auto _ : state) {
    clear_word_cache();
    benchmark::DoNotOptimize(z_map(ZModel::BZFinite, d, {0, 10, 30}));
  }
  state.counters["words"] = static_cast<double>(d.size());
}
BENCHMARK(BM_ZMapWordsCold);

static void BM_GTruncated(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(G_truncated(1, 0, 4, r, 2, 15));
}
BENCHMARK(BM_GTruncated)->Arg(1)->Arg(2);

static void BM_Recurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_recurrence(0, 1, 4, 2, 2, 15));
}
BENCHMARK(BM_Recurrence);

static void BM_SuiteSmall(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.max_weight = 3;
  cfg.max_N = 4;
  cfg.order = 10;
  cfg.maxdeg = 1;
  cfg.parallelism = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_constructor_cache();
    clear_word_cache();
    benchmark::DoNotOptimize(run_suite(cfg));
  }
}
BENCHMARK(BM_SuiteSmall)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
