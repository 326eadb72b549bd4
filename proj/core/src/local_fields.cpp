#include "adelic/local_fields.hpp"

#include "adelic/errors.hpp"
#include "adelic/factor_modp.hpp"
#include "adelic/splitting.hpp"

#include <algorithm>

namespace adelic {

namespace {

mpz_class power(const mpz_class& p, unsigned k) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

IntPoly exact_divide(const IntPoly& a, const mpz_class& d) {
  std::vector<mpz_class> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& v : c) {
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
      throw PreconditionError("hensel_lift: product does not agree with f");
    }
    v /= d;
  }
  return IntPoly(std::move(c));
}

bool is_eisenstein(const ModPoly& e, const mpz_class& p) {
  if (e.degree() < 1 || !e.is_monic()) return false;
  const auto c = e.coefficients();
  for (int i = 0; i < e.degree(); ++i) {
    if (c[i] % p != 0) return false;
  }
  const mpz_class p2 = p * p;
  // v_p(c_0) = 1 is only visible modulo p^2 or finer
  return e.modulus() % p2 == 0 && c[0] % p2 != 0;
}

}  // namespace

std::pair<ModPoly, ModPoly> hensel_lift(const IntPoly& f, const ModPoly& g, const ModPoly& h,
                                        unsigned k) {
  const mpz_class& p = g.modulus();
  if (h.modulus() != p) throw PreconditionError("hensel_lift: factors have different moduli");
  if (k < 1) throw PreconditionError("hensel_lift: exponent must be positive");
  if (!g.is_monic() || !h.is_monic()) throw PreconditionError("hensel_lift: factors must be monic");
  if (g.degree() + h.degree() != f.degree()) {
    throw PreconditionError("hensel_lift: degrees do not add up");
  }
  if (!(ModPoly(f, p) == g * h)) throw PreconditionError("hensel_lift: f != g h mod p");
  const ExtendedGcd eg = extended_gcd_modp(g, h);
  if (eg.gcd.degree() != 0) throw PreconditionError("hensel_lift: factors are not coprime mod p");
  // s g + t h = gcd, a unit
  const ModPoly gcd_inv = ModPoly::constant(
      [&] {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), eg.gcd.coefficients()[0].get_mpz_t(), p.get_mpz_t());
        return inv;
      }(),
      p);
  const ModPoly t = eg.t * gcd_inv;

  IntPoly G = g.lift();
  IntPoly H = h.lift();
  mpz_class pj = p;
  for (unsigned j = 1; j < k; ++j, pj *= p) {
    ModPoly err(exact_divide(f - G * H, pj), p);
    ModPoly a = (err * t) % g;
    ModPoly b = (err - a * h) / g;
    G = G + a.lift() * IntPoly::constant(pj);
    H = H + b.lift() * IntPoly::constant(pj);
  }
  const mpz_class pk = power(p, k);
  return {ModPoly(G, pk), ModPoly(H, pk)};
}

std::optional<std::vector<LocalPrime>> local_primes(const NumberField& field, const mpz_class& p,
                                                    long precision, unsigned lift_exponent) {
  const PrimeDecomposition d = decompose(field, p, precision);
  if (!d.resolved()) return std::nullopt;

  std::vector<LocalPrime> out;
  for (const auto& pf : d.factors) out.push_back({pf.e, pf.f, std::nullopt});

  const unsigned k = std::max(2u, lift_exponent);
  const IntPoly& f = field.min_poly();
  const auto factors = factor_modp(ModPoly(f, p));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [phi, mult] = factors[i];
    if (mult < 2 || phi.degree() != 1) continue;
    ModPoly g = ModPoly::constant(1, p);
    for (unsigned r = 0; r < mult; ++r) g *= phi;
    ModPoly h = ModPoly::constant(1, p);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j == i) continue;
      for (unsigned r = 0; r < factors[j].multiplicity; ++r) h *= factors[j].factor;
    }
    const ModPoly local = hensel_lift(f, g, h, k).first;
    // phi = x - c
    const mpz_class c = (p - phi.coefficients()[0]) % p;
    const ModPoly shifted(local.lift().taylor_shift(c), local.modulus());
    if (!is_eisenstein(shifted, p)) continue;
    for (auto& lp : out) {
      if (lp.f == 1 && lp.e == static_cast<int>(mult) && !lp.eisenstein) {
        lp.eisenstein = shifted;
        break;
      }
    }
  }
  return out;
}

}  // namespace adelic
