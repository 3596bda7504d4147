#include "silsp/oracle.hpp"
#include "silsp/solver.hpp"
#include "test_support.hpp"

#include <benchmark/benchmark.h>

using namespace silsp;

namespace {

struct Fixture {
  StructureClass s = StructureClass::prototype(AlgebraKind::Herm, Field::Complex);
  Matrix x, b, z;

  explicit Fixture(Index n) {
    testing::Rng rng(7);
    x = testing::random_rank_deficient(rng, n, n / 2 + 1, n / 2, true);
    b = testing::random_matrix(rng, n, n / 2 + 1, true);
    z = testing::random_structured_contraction(rng, s, n);
  }
};

void bm_rho(benchmark::State& state) {
  Fixture f(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rho(f.s, f.x, f.b));
  }
}

void bm_min_frobenius(benchmark::State& state) {
  Fixture f(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_frobenius(f.s, f.x, f.b));
  }
}

void bm_min_spectral(benchmark::State& state) {
  Fixture f(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_spectral_family(f.s, f.x, f.b, f.z));
  }
}

void bm_oracle(benchmark::State& state) {
  Fixture f(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_solve(f.s, f.x, f.b));
  }
}

}  // namespace

BENCHMARK(bm_rho)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(bm_min_frobenius)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(bm_min_spectral)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(bm_oracle)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
