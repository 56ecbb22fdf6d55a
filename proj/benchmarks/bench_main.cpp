#include <benchmark/benchmark.h>

#include <random>

#include "barbell/classes.hpp"
#include "barbell/hexagon.hpp"
#include "barbell/intlat.hpp"
#include "barbell/lambda.hpp"
#include "barbell/whitehead.hpp"

using namespace barbell;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_HexNormalForm(benchmark::State& state) {
  const HexElement x{w3(delta(state.range(0)), 3).poly, 3};
  for (auto _ : state) benchmark::DoNotOptimize(hex_normal_form(x));
}
BENCHMARK(BM_HexNormalForm)->Arg(10)->Arg(40);

static void BM_IndependenceRank(benchmark::State& state) {
  std::vector<GClass> ds;
  for (std::int64_t k = 4; k <= state.range(0); ++k) ds.push_back(delta(k));
  for (auto _ : state) benchmark::DoNotOptimize(independence_rank(ds, 3).rank);
}
BENCHMARK(BM_IndependenceRank)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_LambdaReduce(benchmark::State& state) {
  const LambdaContext ctx(5, 4);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> e(-200, 200), c(-9, 9);
  LaurentPoly1 p;
  for (int i = 0; i < state.range(0); ++i) p.add_term(e(rng), c(rng));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_reduce(p, ctx));
}
BENCHMARK(BM_LambdaReduce)->Arg(16)->Arg(256);

static void BM_FMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(f_matrix(state.range(0)));
}
BENCHMARK(BM_FMatrix)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_DerivedRelators(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derive_R_relators(3, -state.range(0), state.range(0)));
}
BENCHMARK(BM_DerivedRelators)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
