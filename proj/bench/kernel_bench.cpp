// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "templ/kernels.hpp"

using namespace templ;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, Field f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4));
  return m;
}

template <Matrix (*Kernel)(const Matrix&, const Matrix&)>
void bm_multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Field f = state.range(1) ? Field::prime(101) : Field::rationals();
  Matrix a = random_matrix(n, n, f, 1), b = random_matrix(n, n, f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
  state.SetComplexityN(state.range(0));
}

template <Matrix (*Kernel)(const Matrix&, const Matrix&)>
void bm_kronecker(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Field f = state.range(1) ? Field::prime(101) : Field::rationals();
  Matrix a = random_matrix(n, n, f, 3), b = random_matrix(n, n, f, 4);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

template <void (*Sweep)(std::size_t, const std::function<void(std::size_t)>&)>
void bm_sweep(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  Field f = Field::prime(101);
  Matrix a = random_matrix(12, 12, f, 5);
  std::vector<Rational> out(count);
  for (auto _ : state) {
    Sweep(count, [&](std::size_t i) {
      Matrix p = a;
      for (std::size_t k = 0; k < 1 + i % 4; ++k) p = kernels::serial::multiply(p, a);
      out[i] = p(0, 0);
    });
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(bm_multiply<kernels::serial::multiply>)->ArgsProduct({{16, 48, 96}, {0, 1}});
BENCHMARK(bm_multiply<kernels::omp::multiply>)->ArgsProduct({{16, 48, 96}, {0, 1}});
BENCHMARK(bm_kronecker<kernels::serial::kronecker>)->ArgsProduct({{6, 12}, {0, 1}});
BENCHMARK(bm_kronecker<kernels::omp::kronecker>)->ArgsProduct({{6, 12}, {0, 1}});
BENCHMARK(bm_sweep<kernels::serial::for_each_index>)->Arg(64)->Arg(256);
BENCHMARK(bm_sweep<kernels::omp::for_each_index>)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
