#include <adelic/factor_modp.hpp>
#include <adelic/invariants.hpp>
#include <adelic/residue_ring.hpp>
#include <adelic/splitting.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace adelic;

namespace {

ModPoly random_monic(std::mt19937_64& rng, long p, int degree) {
  std::vector<mpz_class> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(static_cast<long>(rng() % p));
  c.emplace_back(1);
  return ModPoly(p, std::move(c));
}

void BM_FactorModp(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const long p = 97;
  std::vector<ModPoly> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_monic(rng, p, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor_modp(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_FactorModp)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Spectrum(benchmark::State& state) {
  const NumberField k(parse_poly("x^7 - 7*x + 3"));
  for (auto _ : state) {
    clear_decomposition_cache();
    benchmark::DoNotOptimize(spectrum(k, state.range(0)));
  }
}
BENCHMARK(BM_Spectrum)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_BadPrimeDecompose(benchmark::State& state) {
  const NumberField k(parse_poly("x^8 - 3"));
  for (auto _ : state) {
    clear_decomposition_cache();
    benchmark::DoNotOptimize(decompose(k, 2));
    benchmark::DoNotOptimize(decompose(k, 3));
  }
}
BENCHMARK(BM_BadPrimeDecompose);

void BM_RingIsomorphism(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const mpz_class mod = mpz_class(1) << (s / 2 + 2);
  const auto a = std::get<ResidueRing>(residue_ring_construct(2, 2, 1, ModPoly(parse_poly("x^2 - 2"), mod), s));
  const auto b = std::get<ResidueRing>(residue_ring_construct(2, 2, 1, ModPoly(parse_poly("x^2 + 2"), mod), s));
  for (auto _ : state) benchmark::DoNotOptimize(finite_ring_isomorphic(a, b));
}
BENCHMARK(BM_RingIsomorphism)->Arg(5)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
