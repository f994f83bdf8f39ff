#include <benchmark/benchmark.h>

#include "cominimal/families.hpp"
#include "cominimal/oracle.hpp"
#include "cominimal/sumset.hpp"

using namespace cominimal;

namespace {

WindowedSet dense_interval(i64 n) { return WindowedSet::interval(IntegerWindow::of(0, n - 1)); }

void bench_kernel_dense(benchmark::State& state) {
  i64 n = state.range(0);
  WindowedSet a = dense_interval(n);
  WindowedSet b = dense_interval(n);
  IntegerWindow target = IntegerWindow::of(0, 4 * n - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumset(a, b, target));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(bench_kernel_dense)->Arg(512)->Arg(1024)->Arg(4096);

void bench_naive_dense(benchmark::State& state) {
  i64 n = state.range(0);
  std::vector<i64> a = dense_interval(n).elements();
  std::vector<i64> b = a;
  IntegerWindow target = IntegerWindow::of(0, 4 * n - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::naive_sumset(a, b, target));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(bench_naive_dense)->Arg(512)->Arg(1024)->Arg(4096);

void bench_kernel_structured(benchmark::State& state) {
  i64 reach = state.range(0);
  WindowedSet s = materialize(FamilySpec::S(), IntegerWindow::of(-reach, -1));
  WindowedSet t = materialize(FamilySpec::T(), IntegerWindow::of(1, reach));
  IntegerWindow target = IntegerWindow::of(-reach / 2, reach / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumset(s, t, target));
  }
}
BENCHMARK(bench_kernel_structured)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

void bench_membership(benchmark::State& state) {
  FamilySpec s = FamilySpec::S();
  i64 x = -1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(member(s, x));
    x = x <= -(i64(1) << 30) ? -1 : 2 * x - 1;
  }
}
BENCHMARK(bench_membership);

void bench_representations(benchmark::State& state) {
  FamilySpec u = FamilySpec::U();
  FamilySpec v = FamilySpec::V();
  i64 y = -4096;
  for (auto _ : state) {
    benchmark::DoNotOptimize(representations(y, u, v, 20));
    y = y == 4096 ? -4096 : y + 1;
  }
}
BENCHMARK(bench_representations);

}  // namespace

BENCHMARK_MAIN();
