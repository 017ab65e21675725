// Serial reference vs OpenMP versions of the two hot kernels: Novikov
// series convolution and the Newton seed grid of the orbit search.

#include <benchmark/benchmark.h>

#include <random>

#include "symtorsion/kernels/convolution.hpp"
#include "symtorsion/kernels/orbit_search.hpp"
#include "symtorsion/novikov.hpp"
#include "symtorsion/torus.hpp"

namespace {

using namespace symt;

NovikovElement random_series(const LatticePtr& l, int terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-12, 12), coeff(-9, 9);
  NovikovElement::TermMap m;
  while (static_cast<int>(m.size()) < terms) {
    const int c = coeff(rng);
    if (c == 0) continue;
    m[GroupElement({coord(rng), coord(rng)})] = c;
  }
  return NovikovElement(l, std::move(m));
}

LatticePtr plane() { return std::make_shared<const Lattice>(std::vector<Rational>{1, Rational(1, 3)}, std::vector<std::int64_t>{0, 0}); }

void BM_ConvolveSerial(benchmark::State& state) {
  const auto l = plane();
  const auto a = kernels::weighted_terms(*l, random_series(l, state.range(0), 1).terms());
  const auto b = kernels::weighted_terms(*l, random_series(l, state.range(0), 2).terms());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_serial(a, b, std::nullopt));
}

void BM_ConvolveParallel(benchmark::State& state) {
  const auto l = plane();
  const auto a = kernels::weighted_terms(*l, random_series(l, state.range(0), 1).terms());
  const auto b = kernels::weighted_terms(*l, random_series(l, state.range(0), 2).terms());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_parallel(a, b, std::nullopt));
}

void BM_SeedGridSerial(benchmark::State& state) {
  const torus::TorusSystem sys(Rational(1, 5));
  const auto seeds = torus::seed_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(torus::newton_from_seeds_serial(sys, seeds, {}));
}

void BM_SeedGridParallel(benchmark::State& state) {
  const torus::TorusSystem sys(Rational(1, 5));
  const auto seeds = torus::seed_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(torus::newton_from_seeds_parallel(sys, seeds, {}));
}

}  // namespace

BENCHMARK(BM_ConvolveSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolveParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeedGridSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeedGridParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
