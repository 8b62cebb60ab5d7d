#include <benchmark/benchmark.h>

#include "avgord/criterion.hpp"

using namespace avgord;

static void BM_EnumeratePSL2_13(benchmark::State& state) {
  for (auto _ : state) {
    GroupPtr g = EnumeratedGroup::enumerate("PSL(2,13)");
    benchmark::DoNotOptimize(g->order());
  }
}
BENCHMARK(BM_EnumeratePSL2_13)->Unit(benchmark::kMillisecond);

static void BM_EnumerateS7(benchmark::State& state) {
  for (auto _ : state) {
    GroupPtr g = EnumeratedGroup::enumerate("S7");
    benchmark::DoNotOptimize(g->order());
  }
}
BENCHMARK(BM_EnumerateS7)->Unit(benchmark::kMillisecond);

static void BM_SpectrumS7(benchmark::State& state) {
  GroupPtr g = EnumeratedGroup::enumerate("S7");
  for (auto _ : state) {
    OrderSpectrum s = order_spectrum(*g);
    benchmark::DoNotOptimize(s.psi());
  }
}
BENCHMARK(BM_SpectrumS7)->Unit(benchmark::kMillisecond);

static void BM_ConjugacyClassesS6(benchmark::State& state) {
  GroupPtr g = EnumeratedGroup::enumerate("S6");
  for (auto _ : state) {
    ClassPartition part = conjugacy_classes(*g);
    benchmark::DoNotOptimize(part.classes.size());
  }
}
BENCHMARK(BM_ConjugacyClassesS6)->Unit(benchmark::kMillisecond);

static void BM_DerivedSeriesS7(benchmark::State& state) {
  GroupPtr g = EnumeratedGroup::enumerate("S7");
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_solvable(*g));
  }
}
BENCHMARK(BM_DerivedSeriesS7)->Unit(benchmark::kMillisecond);

// The O(n^2) scan behind the inversion-ratio analysis.
static void BM_InversionScanA6(benchmark::State& state) {
  GroupPtr g = EnumeratedGroup::enumerate("A6");
  for (auto _ : state) {
    auto counts = g->conjugation_inversion_counts();
    benchmark::DoNotOptimize(counts.back());
  }
}
BENCHMARK(BM_InversionScanA6)->Unit(benchmark::kMillisecond);

static void BM_InversionScanS7(benchmark::State& state) {
  GroupPtr g = EnumeratedGroup::enumerate("S7");
  for (auto _ : state) {
    auto counts = g->conjugation_inversion_counts();
    benchmark::DoNotOptimize(counts.back());
  }
}
BENCHMARK(BM_InversionScanS7)->Unit(benchmark::kMillisecond);

static void BM_ClassifyPSL2_11(benchmark::State& state) {
  GroupPtr g = EnumeratedGroup::enumerate("PSL(2,11)");
  for (auto _ : state) {
    ClassificationReport r = classify(*g);
    benchmark::DoNotOptimize(r.consistent);
  }
}
BENCHMARK(BM_ClassifyPSL2_11)->Unit(benchmark::kMillisecond);

static void BM_QuotientSL2_9ByCenter(benchmark::State& state) {
  GroupPtr g = EnumeratedGroup::enumerate("SL(2,9)");
  ElementSet center = solvable_radical(*g);
  for (auto _ : state) {
    GroupPtr q = quotient(*g, center);
    benchmark::DoNotOptimize(q->order());
  }
}
BENCHMARK(BM_QuotientSL2_9ByCenter)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
