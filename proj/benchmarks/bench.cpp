#include <benchmark/benchmark.h>

#include "pptrans/closure.hpp"
#include "pptrans/counting.hpp"
#include "pptrans/generators.hpp"
#include "pptrans/partition.hpp"
#include "pptrans/rank.hpp"

using namespace pptrans;

namespace {

void BM_closure(benchmark::State& state, const char* spec) {
  const Partition p = Partition::parse(spec);
  const auto gens = full_generating_set(p).elements;
  ClosureOptions opts;
  opts.retain_limit = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(gens, opts).order);
  }
}
BENCHMARK_CAPTURE(BM_closure, monoid_405, "2+2+1");
BENCHMARK_CAPTURE(BM_closure, monoid_3024, "3+2+1");
BENCHMARK_CAPTURE(BM_closure, monoid_12427, "3+2+2");
BENCHMARK_CAPTURE(BM_closure, monoid_823543, "7")->Unit(benchmark::kMillisecond);

void BM_order_T(benchmark::State& state) {
  const Partition p = Partition::parse("9+8+7+6+5+4+3+2+1");
  for (auto _ : state) benchmark::DoNotOptimize(order_T(p));
}
BENCHMARK(BM_order_T);

void BM_order_Sigma_permanent(benchmark::State& state) {
  const Partition p = Partition::parse("4+3+3+2+2+2+1+1+1+1");
  for (auto _ : state) benchmark::DoNotOptimize(order_Sigma(p));
}
BENCHMARK(BM_order_Sigma_permanent);

void BM_rank_total(benchmark::State& state) {
  const Partition p = Partition::parse("9+8+7+6+5+4+3+2+1");
  for (auto _ : state) benchmark::DoNotOptimize(rank_total(p).total);
}
BENCHMARK(BM_rank_total);

void BM_full_generating_set(benchmark::State& state) {
  const Partition p = Partition::parse("3+3+2+2+1+1");
  for (auto _ : state) benchmark::DoNotOptimize(full_generating_set(p).elements.size());
}
BENCHMARK(BM_full_generating_set);

void BM_minimal_genset_search(benchmark::State& state) {
  const Partition p = Partition::parse("2+1");
  for (auto _ : state) benchmark::DoNotOptimize(minimal_genset_search(p).rank);
}
BENCHMARK(BM_minimal_genset_search);

}  // namespace

BENCHMARK_MAIN();
