#include <benchmark/benchmark.h>

#include "tpa/catalog.hpp"
#include "tpa/degeneration.hpp"
#include "tpa/derivations.hpp"
#include "tpa/isomorphism.hpp"
#include "tpa/linear_solve.hpp"
#include "tpa/samples.hpp"

using namespace tpa;

namespace {

void BM_Nullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RationalSampler rs(1);
  Matrix<Rational> a(n, n + 2);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      a(i, j) = rs.next();
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(nullspace(a));
  }
}
BENCHMARK(BM_Nullspace)->Arg(9)->Arg(27)->Arg(54);

void BM_PairDerivations(benchmark::State& state) {
  const Pair p = instantiate<Rational>("T09", {Rational(2), Rational(1)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_derivations(p));
  }
}
BENCHMARK(BM_PairDerivations);

void BM_Fingerprint(benchmark::State& state) {
  const Pair p = instantiate<Rational>("T17", {Rational(3)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(fingerprint(p));
  }
}
BENCHMARK(BM_Fingerprint);

void BM_DegenerationRow(benchmark::State& state) {
  const auto& row = degeneration_table()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_table_row(row));
  }
}
BENCHMARK(BM_DegenerationRow)->Arg(0)->Arg(9)->Arg(16);

void BM_RationalFunctionArithmetic(benchmark::State& state) {
  const RF f = (RF::t() + RF(2)) / (RF::t_pow(2) - RF(3));
  const RF g = RF::t_pow(-3) * (RF(1) - RF::t());
  for (auto _ : state) {
    benchmark::DoNotOptimize((f * g + f) / (g - f));
  }
}
BENCHMARK(BM_RationalFunctionArithmetic);

} // namespace

BENCHMARK_MAIN();
