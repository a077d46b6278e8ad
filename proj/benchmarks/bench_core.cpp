#include <benchmark/benchmark.h>

#include <random>

#include "qspencer/cohomology.hpp"
#include "qspencer/kostant.hpp"

using namespace qsp;

namespace {

ExactMatrix random_int_matrix(long rows, long cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  ExactMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m.at(r, c) = d(rng);
  return m;
}

}  // namespace

static void BM_rank(benchmark::State& state) {
  const long n = state.range(0);
  ExactMatrix m = random_int_matrix(n, n, 1234);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(40)->Arg(80)->Arg(120);

static void BM_kernel(benchmark::State& state) {
  const long n = state.range(0);
  ExactMatrix m = random_int_matrix(n, 2 * n, 77);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_kernel)->Arg(40)->Arg(80);

static void BM_build_algebra(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GradedAlgebra a(n);
    benchmark::DoNotOptimize(a.total_dim());
  }
}
BENCHMARK(BM_build_algebra)->Arg(2)->Arg(3)->Arg(4);

static void BM_h02_relative(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GradedAlgebra a(n);
  for (auto _ : state) {
    SpencerContext ctx(a);
    benchmark::DoNotOptimize(cohomology(ctx, 0, 2, Flavor::relative).dim);
  }
}
BENCHMARK(BM_h02_relative)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_hasse_q3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hasse_diagram(n, 3).size());
}
BENCHMARK(BM_hasse_q3)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
