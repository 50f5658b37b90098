// Serial reference kernels against the OpenMP / transform kernels.
//
//   ./bench_kernels --benchmark_filter=Square
//   OMP_NUM_THREADS=4 ./bench_kernels

#include <symmoment/hecke.hpp>
#include <symmoment/kernels/series.hpp>
#include <symmoment/kernels/sieve.hpp>

#include <benchmark/benchmark.h>
#include <omp.h>

#include <cmath>

namespace {

using symmoment::BigInt;

std::vector<BigInt> eta_cube(std::size_t len) {
  std::vector<BigInt> v(len, 0);
  for (std::size_t k = 0; k * (k + 1) / 2 < len; ++k) {
    long c = static_cast<long>(2 * k + 1);
    v[k * (k + 1) / 2] = k % 2 ? -c : c;
  }
  return v;
}

// eta^12 is dense with coefficients of the size that appear in the last squaring.
std::vector<BigInt> eta_twelve(std::size_t len) {
  auto e6 = symmoment::kernels::square(eta_cube(len), len);
  return symmoment::kernels::square(e6, len);
}

void BM_SquareReference(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto a = eta_twelve(len);
  for (auto _ : state) benchmark::DoNotOptimize(symmoment::kernels::multiply_reference(a, a, len));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SquareReference)->RangeMultiplier(2)->Range(1 << 10, 1 << 13)->Unit(benchmark::kMillisecond);

void BM_SquareTransform(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto a = eta_twelve(len);
  for (auto _ : state) benchmark::DoNotOptimize(symmoment::kernels::square(a, len));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SquareTransform)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMillisecond);

void BM_DeltaQexp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symmoment::delta_qexp(n, symmoment::kHardQexpLimit));
}
BENCHMARK(BM_DeltaQexp)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

symmoment::kernels::PrimePowerTable sample_table(const std::vector<std::uint32_t>& spf) {
  const std::size_t N = spf.size() - 1;
  symmoment::kernels::PrimePowerTable table(N);
  for (std::size_t p = 2; p <= N; ++p) {
    if (spf[p] != p) continue;
    const unsigned amax = symmoment::kernels::max_exponent(p, N);
    std::vector<double> v(amax);
    for (unsigned a = 1; a <= amax; ++a) v[a - 1] = std::cos(static_cast<double>(p * a));
    table.set(static_cast<std::uint32_t>(p), std::move(v));
  }
  return table;
}

void BM_FillReference(benchmark::State& state) {
  const auto spf = symmoment::kernels::smallest_prime_factors(static_cast<std::size_t>(state.range(0)));
  const auto table = sample_table(spf);
  for (auto _ : state) benchmark::DoNotOptimize(symmoment::kernels::multiplicative_fill_reference(spf, table));
}
BENCHMARK(BM_FillReference)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_FillParallel(benchmark::State& state) {
  const auto spf = symmoment::kernels::smallest_prime_factors(static_cast<std::size_t>(state.range(0)));
  const auto table = sample_table(spf);
  state.counters["threads"] = omp_get_max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(symmoment::kernels::multiplicative_fill(spf, table));
}
BENCHMARK(BM_FillParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
