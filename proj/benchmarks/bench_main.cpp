#include <benchmark/benchmark.h>

#include "pflat/catalog.hpp"
#include "pflat/classify.hpp"
#include "pflat/connection.hpp"
#include "pflat/linalg.hpp"
#include "pflat/polynomial.hpp"

using namespace pflat;

namespace {

// Dense matrix with small, fixed, non-degenerate entries.
Matrix sample_matrix(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>((3 * i + 7 * j + i * j) % 11) - 5, 1 + (i + j) % 3);
  return m;
}

void BM_Rref(benchmark::State& state) {
  const Matrix m = sample_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_MinimalPolynomial(benchmark::State& state) {
  const Matrix m = sample_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_polynomial(m));
}
BENCHMARK(BM_MinimalPolynomial)->Arg(4)->Arg(8)->Arg(12);

void BM_IrreducibleGl(benchmark::State& state) {
  const auto e = gl_column_block(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(e.rep));
}
BENCHMARK(BM_IrreducibleGl)->Args({2, 1})->Args({3, 1})->Args({4, 1})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_ClassifyQuaternionic(benchmark::State& state) {
  const auto e = su2_quaternionic();
  for (auto _ : state) benchmark::DoNotOptimize(classify(e.rep, e.k));
}
BENCHMARK(BM_ClassifyQuaternionic)->Unit(benchmark::kMillisecond);

void BM_ClassifyRotation(benchmark::State& state) {
  const auto e = rotation_dilation();
  for (auto _ : state) benchmark::DoNotOptimize(classify(e.rep, e.k));
}
BENCHMARK(BM_ClassifyRotation);

void BM_CurvatureGl(benchmark::State& state) {
  const auto e = gl_column_block(static_cast<std::size_t>(state.range(0)), 1);
  const auto conn = ConnectionData::from_rep(e.rep, e.k);
  for (auto _ : state) benchmark::DoNotOptimize(curvature(conn));
}
BENCHMARK(BM_CurvatureGl)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
