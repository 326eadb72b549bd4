#include <adelic/errors.hpp>
#include <adelic/factor_modp.hpp>
#include <adelic/local_fields.hpp>
#include <adelic/primes.hpp>
#include <adelic/splitting.hpp>
#include <adelic_cli/corpus.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace adelic;

namespace {

NumberField field(const char* poly) { return NumberField(parse_poly(poly)); }

mpz_class power(long p, unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

}  // namespace

TEST(HenselLift, LiftsSquareRootOfTwoModSeven) {
  const IntPoly f = parse_poly("x^2 - 2");
  const ModPoly g(IntPoly({-3, 1}), 7), h(IntPoly({-4, 1}), 7);
  auto [G, H] = hensel_lift(f, g, h, 6);
  EXPECT_EQ(G.modulus(), power(7, 6));
  EXPECT_EQ(G * H, ModPoly(f, power(7, 6)));
  EXPECT_EQ(G.reduce(7), g);
  EXPECT_EQ(H.reduce(7), h);
}

TEST(HenselLift, RandomCoprimeSplittings) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> coef(-20, 20);
  int done = 0;
  while (done < 100) {
    const long p = std::vector<long>{3, 5, 7, 11, 13}[rng() % 5];
    std::vector<mpz_class> c;
    const int deg = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng));
    c.emplace_back(1);
    const IntPoly f(std::move(c));
    const auto factors = factor_modp(ModPoly(f, p));
    if (factors.size() < 2) continue;
    ModPoly g = ModPoly::constant(1, p), h = ModPoly::constant(1, p);
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (unsigned m = 0; m < factors[i].multiplicity; ++m)
        (i == 0 ? g : h) *= factors[i].factor;
    const unsigned k = 2 + static_cast<unsigned>(rng() % 6);
    auto [G, H] = hensel_lift(f, g, h, k);
    EXPECT_EQ(G * H, ModPoly(f, power(p, k))) << f.to_string() << " mod " << p;
    EXPECT_TRUE(G.is_monic());
    EXPECT_EQ(G.degree(), g.degree());
    ++done;
  }
}

TEST(HenselLift, RejectsNonCoprimeFactors) {
  const IntPoly f = parse_poly("x^2 - 2");
  const ModPoly x(IntPoly({0, 1}), 2);
  EXPECT_THROW(hensel_lift(f, x, x, 4), PreconditionError);
}

TEST(LocalPrimes, RamifiedQuadraticHasEisensteinPresentation) {
  const auto lp = local_primes(field("x^2 - 2"), 2, 0, 6);
  ASSERT_TRUE(lp.has_value());
  ASSERT_EQ(lp->size(), 1u);
  const auto& P = (*lp)[0];
  EXPECT_EQ(std::pair(P.e, P.f), std::pair(2, 1));
  ASSERT_TRUE(P.eisenstein.has_value());
  const auto c = P.eisenstein->coefficients();
  ASSERT_EQ(P.eisenstein->degree(), 2);
  EXPECT_EQ(c[0] % 2, 0);
  EXPECT_NE(c[0] % 4, 0);
  EXPECT_EQ(c[1] % 2, 0);
}

TEST(LocalPrimes, MatchesDecompositionOverCorpus) {
  for (const auto& cf : adelic::cli::corpus()) {
    const NumberField k = cf.field();
    for (const auto& p : prime_divisors(k.poly_disc())) {
      const auto d = decompose(k, p);
      const auto lp = local_primes(k, p, 0, 4);
      ASSERT_EQ(lp.has_value(), d.resolved());
      if (!lp) continue;
      ASSERT_EQ(lp->size(), d.factors.size());
      for (std::size_t i = 0; i < lp->size(); ++i) {
        EXPECT_EQ((*lp)[i].e, d.factors[i].e);
        EXPECT_EQ((*lp)[i].f, d.factors[i].f);
        if (const auto& E = (*lp)[i].eisenstein) {
          EXPECT_EQ(E->degree(), (*lp)[i].e);
          const auto c = E->coefficients();
          for (int j = 0; j < E->degree(); ++j) EXPECT_EQ(c[j] % p, 0) << cf.poly;
          EXPECT_NE(c[0] % (p * p), 0) << cf.poly;
        }
      }
    }
  }
}
