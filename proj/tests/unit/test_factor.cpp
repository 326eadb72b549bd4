#include <adelic/errors.hpp>
#include <adelic/factor_modp.hpp>
#include <adelic/primes.hpp>

#include <oracles.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace adelic;

namespace {

ModPoly mp(std::initializer_list<long> c, long p) { return ModPoly(IntPoly(c), p); }

std::vector<std::int64_t> small_primes() { return primes_up_to(97); }

ModPoly random_squarefree(std::mt19937_64& rng, long p, int deg) {
  for (;;) {
    ModPoly f = oracle::random_monic(rng, p, deg);
    if (is_squarefree_modp(f)) return f;
  }
}

std::multiset<int> degree_multiset(const std::map<int, int>& counts) {
  std::multiset<int> out;
  for (auto [d, c] : counts)
    for (int i = 0; i < c; ++i) out.insert(d);
  return out;
}

}  // namespace

TEST(GcdModp, Examples) {
  EXPECT_EQ(gcd_modp(mp({-1, 0, 1}, 5), mp({-1, 1}, 5)), mp({-1, 1}, 5));
  EXPECT_EQ(gcd_modp(mp({1, 0, 1}, 3), mp({0, 1}, 3)), mp({1}, 3));
  EXPECT_EQ(gcd_modp(mp({2, 4}, 5), ModPoly(IntPoly(), 5)), mp({3, 1}, 5));
  EXPECT_THROW(gcd_modp(mp({1, 1}, 4), mp({1}, 4)), ModulusError);
}

TEST(GcdModp, RandomSquarefreeIsCoprimeToDerivative) {
  std::mt19937_64 rng(11);
  const auto primes = small_primes();
  for (int trial = 0; trial < 200; ++trial) {
    const long p = primes[rng() % primes.size()];
    const int deg = 2 + static_cast<int>(rng() % 7);
    if (p > 13 && deg > 4) continue;  // keep the brute-force oracle cheap
    ModPoly f = oracle::random_monic(rng, p, deg);
    const bool sqf_oracle = [&] {
      for (int d = 1; 2 * d <= deg; ++d)
        for (const auto& g : oracle::monic_polys(p, d))
          if (oracle::divides(oracle::mul(g, g, p), oracle::reduce(f.lift(), p), p)) return false;
      return true;
    }();
    EXPECT_EQ(gcd_modp(f, f.derivative()).degree() == 0, sqf_oracle) << f.to_string();
  }
}

TEST(ExtendedGcd, BezoutIdentity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const long p = small_primes()[rng() % 25];
    ModPoly a = oracle::random_monic(rng, p, 1 + rng() % 6);
    ModPoly b = oracle::random_monic(rng, p, 1 + rng() % 6);
    auto r = extended_gcd_modp(a, b);
    EXPECT_EQ(r.s * a + r.t * b, r.gcd);
    EXPECT_EQ(r.gcd, gcd_modp(a, b));
  }
}

TEST(SquarefreeDecomposition, Examples) {
  auto sq = squarefree_decomposition(mp({0, 0, 1}, 2));
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0].part, mp({0, 1}, 2));
  EXPECT_EQ(sq[0].multiplicity, 2u);

  // (x-1)^2 (x-2) mod 7
  const ModPoly f = mp({-1, 1}, 7) * mp({-1, 1}, 7) * mp({-2, 1}, 7);
  auto d = squarefree_decomposition(f);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].part, mp({-2, 1}, 7));
  EXPECT_EQ(d[0].multiplicity, 1u);
  EXPECT_EQ(d[1].part, mp({-1, 1}, 7));
  EXPECT_EQ(d[1].multiplicity, 2u);

  auto x9 = squarefree_decomposition(ModPoly::monomial(1, 9, 3));
  ASSERT_EQ(x9.size(), 1u);
  EXPECT_EQ(x9[0].part, mp({0, 1}, 3));
  EXPECT_EQ(x9[0].multiplicity, 9u);
}

TEST(SquarefreeDecomposition, ReexpansionOnRandomInputsWithPerfectPowers) {
  std::mt19937_64 rng(2024);
  const auto primes = small_primes();
  for (int trial = 0; trial < 500; ++trial) {
    const long p = (trial % 3 == 0) ? std::vector<long>{2, 3, 5}[rng() % 3]
                                     : primes[rng() % primes.size()];
    ModPoly f = oracle::random_monic(rng, p, 1 + rng() % 4);
    if (trial % 4 == 0) {
      ModPoly pth = ModPoly::constant(1, p);
      for (long i = 0; i < p && pth.degree() < 30; ++i) pth *= f;
      f = pth;  // f^p, or a large power of f for big p
    }
    if (trial % 5 == 0) f *= oracle::random_monic(rng, p, 1 + rng() % 3);
    const auto parts = squarefree_decomposition(f);
    ModPoly product = ModPoly::constant(1, p);
    for (const auto& sp : parts) {
      EXPECT_TRUE(is_squarefree_modp(sp.part));
      EXPECT_TRUE(sp.part.is_monic());
      for (unsigned i = 0; i < sp.multiplicity; ++i) product *= sp.part;
    }
    EXPECT_EQ(product, f) << f.to_string() << " mod " << p;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        EXPECT_EQ(gcd_modp(parts[i].part, parts[j].part).degree(), 0);
  }
}

TEST(Ddf, Examples) {
  EXPECT_EQ(ddf(mp({-2, 0, 1}, 7)), (std::map<int, int>{{1, 2}}));
  EXPECT_EQ(ddf(mp({-2, 0, 1}, 3)), (std::map<int, int>{{2, 1}}));
  EXPECT_EQ(ddf(mp({0, -1, 0, 1}, 5)), (std::map<int, int>{{1, 3}}));
}

TEST(CzFactor, Examples) {
  // canonical order compares from the top coefficient: x + 3 before x + 4
  auto a = cz_factor(mp({-2, 0, 1}, 7), 1);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], mp({-4, 1}, 7));
  EXPECT_EQ(a[1], mp({-3, 1}, 7));
  auto b = cz_factor(mp({1, 0, 1}, 3), 1);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], mp({1, 0, 1}, 3));
  auto c = cz_factor(mp({-1, 0, 0, 0, 1}, 5), 1);
  ASSERT_EQ(c.size(), 4u);
  for (long r = 1; r <= 4; ++r) EXPECT_EQ(c[4 - r], mp({-r, 1}, 5));
}

TEST(CzFactor, AgreesWithDdfOnRandomSquarefreeInputs) {
  std::mt19937_64 rng(99);
  const auto primes = small_primes();
  for (int trial = 0; trial < 500; ++trial) {
    const long p = primes[rng() % primes.size()];
    const int deg = 1 + static_cast<int>(rng() % 10);
    const ModPoly f = random_squarefree(rng, p, deg);
    const auto factors = cz_factor(f, derived_seed(f));
    std::multiset<int> cz_degrees;
    ModPoly product = ModPoly::constant(1, p);
    for (const auto& g : factors) {
      cz_degrees.insert(g.degree());
      EXPECT_TRUE(g.is_monic());
      product *= g;
    }
    EXPECT_EQ(product, f);
    EXPECT_EQ(degree_multiset(ddf(f)), cz_degrees) << f.to_string() << " mod " << p;
  }
}

TEST(CzFactor, OutputDoesNotDependOnSeed) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const ModPoly f = random_squarefree(rng, 31, 8);
    EXPECT_EQ(cz_factor(f, 1), cz_factor(f, 987654321));
  }
}

TEST(FactorModp, MatchesTrialDivisionOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const long p = std::vector<long>{2, 3, 5, 7}[rng() % 4];
    const ModPoly f = oracle::random_monic(rng, p, 1 + rng() % 7);
    std::vector<std::pair<int, int>> got;
    for (const auto& [g, m] : factor_modp(f)) got.emplace_back(static_cast<int>(m), g.degree());
    std::sort(got.begin(), got.end(), [](auto a, auto b) {
      return std::pair(a.second, a.first) < std::pair(b.second, b.first);
    });
    EXPECT_EQ(got, oracle::factor_pattern(oracle::reduce(f.lift(), p), p)) << f.to_string();
  }
}

TEST(IrreducibleModp, Examples) {
  EXPECT_EQ(irreducible_modp(2, 1), mp({0, 1}, 2));
  EXPECT_EQ(irreducible_modp(3, 2), mp({1, 0, 1}, 3));
  EXPECT_EQ(irreducible_modp(2, 2), mp({1, 1, 1}, 2));
}

TEST(IrreducibleModp, IsIrreducibleAndDeterministic) {
  for (long p : {2L, 3L, 5L, 7L})
    for (int d = 1; d <= 4; ++d) {
      const ModPoly g = irreducible_modp(p, d);
      EXPECT_EQ(g.degree(), d);
      EXPECT_TRUE(oracle::is_irreducible(oracle::reduce(g.lift(), p), p));
      EXPECT_EQ(g, irreducible_modp(p, d));
    }
}

TEST(Ddf, AgreesWithTheMachineIntegerOracle) {
  std::mt19937_64 rng(71);
  const auto primes = small_primes();
  for (int trial = 0; trial < 300; ++trial) {
    const long p = primes[rng() % primes.size()];
    const ModPoly f = random_squarefree(rng, p, 1 + rng() % 10);
    std::vector<int> ours;
    for (auto [d, c] : ddf(f))
      for (int i = 0; i < c; ++i) ours.push_back(d);
    EXPECT_EQ(ours, oracle::ddf_degrees(oracle::reduce(f.lift(), p), p)) << f.to_string();
  }
}
