#include "adelic/factor_modp.hpp"

#include "adelic/errors.hpp"
#include "poly_internal.hpp"

#include <algorithm>

namespace adelic {

namespace {

void require_prime(const mpz_class& m, const char* op) {
  if (!detail::is_prime_modulus(m)) {
    throw ModulusError(std::string(op) + " requires a prime modulus, got " + m.get_str());
  }
}

ModPoly monic_unchecked(const ModPoly& a) {
  if (a.leading() == 1) return a;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), a.leading().get_mpz_t(), a.modulus().get_mpz_t());
  return a * inv;
}

ModPoly gcd_unchecked(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return monic_unchecked(a);
}

// c(x) = d(x^p) in characteristic p; returns d with coefficients unchanged
// since a^(1/p) = a over F_p.
ModPoly pth_root(const ModPoly& c) {
  const mpz_class& p = c.modulus();
  std::vector<mpz_class> out;
  if (p.fits_ulong_p()) {
    unsigned long step = p.get_ui();
    for (unsigned long i = 0; i * step <= static_cast<unsigned long>(std::max(c.degree(), 0)); ++i) {
      out.push_back(c[i * step]);
    }
  } else {
    out.push_back(c[0]);
  }
  return ModPoly(p, std::move(out));
}

std::vector<SquarefreePart> sqf_unchecked(const ModPoly& a) {
  std::vector<SquarefreePart> result;
  const mpz_class& p = a.modulus();
  if (a.degree() <= 0) return result;
  ModPoly c = gcd_unchecked(a, a.derivative());
  ModPoly w = a / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd_unchecked(w, c);
    ModPoly factor = w / y;
    if (factor.degree() > 0) result.push_back({monic_unchecked(factor), i});
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) {
    unsigned long pu = p.fits_ulong_p() ? p.get_ui() : 0;
    for (auto& part : sqf_unchecked(monic_unchecked(pth_root(c)))) {
      result.push_back({part.part, part.multiplicity * static_cast<unsigned>(pu)});
    }
  }
  std::sort(result.begin(), result.end(), [](const SquarefreePart& x, const SquarefreePart& y) {
    return x.multiplicity < y.multiplicity;
  });
  return result;
}

std::vector<std::pair<int, ModPoly>> ddf_unchecked(const ModPoly& a) {
  std::vector<std::pair<int, ModPoly>> parts;
  const mpz_class& p = a.modulus();
  ModPoly rest = monic_unchecked(a);
  ModPoly x = ModPoly::x(p);
  ModPoly h = x % rest;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, p, rest);
    ModPoly g = gcd_unchecked(rest, h - x);
    if (g.degree() > 0) {
      parts.emplace_back(d, g);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) parts.emplace_back(rest.degree(), rest);
  return parts;
}

void require_squarefree(const ModPoly& a, const char* op) {
  if (!is_squarefree_modp(a)) throw PreconditionError(std::string(op) + ": input is not squarefree");
}

ModPoly random_poly(gmp_randclass& rng, const mpz_class& p, int below_degree) {
  std::vector<mpz_class> c(below_degree);
  for (auto& v : c) v = rng.get_z_range(p);
  return ModPoly(p, std::move(c));
}

void equal_degree_split(const ModPoly& f, int d, gmp_randclass& rng, std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const mpz_class& p = f.modulus();
  ModPoly one = ModPoly::constant(1, p);
  mpz_class half_exp;
  if (p != 2) {
    mpz_class q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    half_exp = (q - 1) / 2;
  }
  for (;;) {
    ModPoly r = random_poly(rng, p, f.degree());
    if (r.degree() < 1) continue;
    ModPoly candidate;
    if (p == 2) {
      ModPoly t = r;
      ModPoly acc = r;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        acc += t;
      }
      candidate = gcd_unchecked(acc, f);
    } else {
      candidate = gcd_unchecked(powmod(r, half_exp, f) - one, f);
    }
    if (candidate.degree() > 0 && candidate.degree() < f.degree()) {
      equal_degree_split(candidate, d, rng, out);
      equal_degree_split(monic_unchecked(f / candidate), d, rng, out);
      return;
    }
  }
}

}  // namespace

ModPoly make_monic(const ModPoly& a) {
  if (a.is_zero()) throw PreconditionError("make_monic: zero polynomial");
  require_prime(a.modulus(), "make_monic");
  return monic_unchecked(a);
}

ModPoly gcd_modp(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw ModulusError("gcd_modp: modulus mismatch");
  require_prime(a.modulus(), "gcd_modp");
  return gcd_unchecked(a, b);
}

ExtendedGcd extended_gcd_modp(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw ModulusError("extended_gcd_modp: modulus mismatch");
  const mpz_class& p = a.modulus();
  require_prime(p, "extended_gcd_modp");
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::constant(1, p), s1(p, {});
  ModPoly t0(p, {}), t1 = ModPoly::constant(1, p);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), r0.leading().get_mpz_t(), p.get_mpz_t());
  return {r0 * inv, s0 * inv, t0 * inv};
}

ModPoly powmod(const ModPoly& base, const mpz_class& exponent, const ModPoly& modulus) {
  ModPoly result = ModPoly::constant(1, base.modulus()) % modulus;
  ModPoly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

bool is_squarefree_modp(const ModPoly& a) {
  require_prime(a.modulus(), "is_squarefree_modp");
  if (a.is_zero()) return false;
  if (a.degree() <= 0) return true;
  ModPoly d = a.derivative();
  if (d.is_zero()) return false;
  return gcd_unchecked(a, d).degree() == 0;
}

std::vector<SquarefreePart> squarefree_decomposition(const ModPoly& a) {
  require_prime(a.modulus(), "squarefree_decomposition");
  if (a.is_zero()) throw PreconditionError("squarefree_decomposition: zero polynomial");
  if (!a.is_monic()) throw PreconditionError("squarefree_decomposition: input must be monic");
  return sqf_unchecked(a);
}

std::vector<std::pair<int, ModPoly>> ddf_parts(const ModPoly& a) {
  require_prime(a.modulus(), "ddf");
  require_squarefree(a, "ddf");
  return ddf_unchecked(a);
}

std::map<int, int> ddf(const ModPoly& a) {
  std::map<int, int> counts;
  for (auto& [d, part] : ddf_parts(a)) counts[d] += part.degree() / d;
  return counts;
}

std::vector<ModPoly> cz_factor(const ModPoly& a, std::uint64_t seed) {
  require_prime(a.modulus(), "cz_factor");
  require_squarefree(a, "cz_factor");
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(mpz_class(std::to_string(seed)));
  std::vector<ModPoly> out;
  for (auto& [d, part] : ddf_unchecked(a)) equal_degree_split(part, d, rng, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::uint64_t derived_seed(const ModPoly& a) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  mix(a.modulus().get_str());
  for (const auto& c : a.coefficients()) mix(c.get_str());
  return h;
}

std::vector<IrreducibleFactor> factor_modp(const ModPoly& a) {
  std::vector<IrreducibleFactor> out;
  for (auto& [part, mult] : squarefree_decomposition(a)) {
    for (auto& g : cz_factor(part, derived_seed(part))) out.push_back({std::move(g), mult});
  }
  std::sort(out.begin(), out.end(), [](const IrreducibleFactor& x, const IrreducibleFactor& y) {
    if (x.factor == y.factor) return x.multiplicity < y.multiplicity;
    return canonical_less(x.factor, y.factor);
  });
  return out;
}

bool is_irreducible_modp(const ModPoly& a) {
  require_prime(a.modulus(), "is_irreducible_modp");
  if (a.degree() < 1) return false;
  if (a.degree() == 1) return true;
  ModPoly m = monic_unchecked(a);
  if (!is_squarefree_modp(m)) return false;
  auto parts = ddf_unchecked(m);
  return parts.size() == 1 && parts.front().first == m.degree();
}

ModPoly irreducible_modp(const mpz_class& p, int d) {
  require_prime(p, "irreducible_modp");
  if (d < 1) throw PreconditionError("irreducible_modp: degree must be positive");
  for (mpz_class n = 0;; ++n) {
    std::vector<mpz_class> c(d + 1, 0);
    mpz_class rest = n;
    for (int i = 0; i < d; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    c[d] = 1;
    ModPoly candidate(p, std::move(c));
    if (is_irreducible_modp(candidate)) return candidate;
  }
}

}  // namespace adelic
