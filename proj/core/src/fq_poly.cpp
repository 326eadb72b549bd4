#include "fq_poly.hpp"

#include "adelic/factor_modp.hpp"

#include <algorithm>

namespace adelic::detail {

FiniteFieldExt::FiniteFieldExt(ModPoly phi) : phi_(std::move(phi)) {
  mpz_pow_ui(q_.get_mpz_t(), p().get_mpz_t(), static_cast<unsigned long>(phi_.degree()));
}

ModPoly FiniteFieldExt::reduce(const ModPoly& a) const { return a % phi_; }

ModPoly FiniteFieldExt::mul(const ModPoly& a, const ModPoly& b) const { return (a * b) % phi_; }

ModPoly FiniteFieldExt::inverse(const ModPoly& a) const {
  auto eg = extended_gcd_modp(a, phi_);
  return eg.s % phi_;
}

FqPoly fq_normalize(FqPoly a) {
  while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
  return a;
}

FqPoly fq_sub(const FiniteFieldExt& k, const FqPoly& a, const FqPoly& b) {
  FqPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  return fq_normalize(std::move(r));
}

FqPoly fq_mul(const FiniteFieldExt& k, const FqPoly& a, const FqPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  FqPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  for (auto& v : r.c) v = k.reduce(v);
  return fq_normalize(std::move(r));
}

namespace {

std::pair<FqPoly, FqPoly> fq_divmod(const FiniteFieldExt& k, const FqPoly& a, const FqPoly& b) {
  FqPoly r = a;
  const int db = b.degree();
  if (r.degree() < db) return {FqPoly{}, r};
  FqPoly q;
  q.c.assign(r.degree() - db + 1, k.zero());
  ModPoly inv = k.inverse(b.c.back());
  for (int d = r.degree(); d >= db; --d) {
    if (r.c[d].is_zero()) continue;
    ModPoly lead = k.mul(r.c[d], inv);
    q.c[d - db] = lead;
    for (int i = 0; i <= db; ++i) r.c[d - db + i] = k.reduce(r.c[d - db + i] - lead * b.c[i]);
  }
  r.c.resize(db);
  return {fq_normalize(std::move(q)), fq_normalize(std::move(r))};
}

FqPoly fq_monic(const FiniteFieldExt& k, FqPoly a) {
  if (a.c.empty()) return a;
  ModPoly inv = k.inverse(a.c.back());
  for (auto& v : a.c) v = k.mul(v, inv);
  return a;
}

}  // namespace

FqPoly fq_rem(const FiniteFieldExt& k, const FqPoly& a, const FqPoly& b) {
  return fq_divmod(k, a, b).second;
}

FqPoly fq_div(const FiniteFieldExt& k, const FqPoly& a, const FqPoly& b) {
  return fq_divmod(k, a, b).first;
}

FqPoly fq_gcd(const FiniteFieldExt& k, FqPoly a, FqPoly b) {
  while (!b.c.empty()) {
    FqPoly r = fq_rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fq_monic(k, std::move(a));
}

FqPoly fq_derivative(const FiniteFieldExt& k, const FqPoly& a) {
  FqPoly d;
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    d.c.push_back(k.reduce(a.c[i] * mpz_class(static_cast<unsigned long>(i))));
  }
  return fq_normalize(std::move(d));
}

FqPoly fq_powmod(const FiniteFieldExt& k, const FqPoly& base, const mpz_class& e,
                 const FqPoly& modulus) {
  FqPoly result{{k.one()}};
  result = fq_rem(k, result, modulus);
  FqPoly b = fq_rem(k, base, modulus);
  for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    result = fq_rem(k, fq_mul(k, result, result), modulus);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fq_rem(k, fq_mul(k, result, b), modulus);
  }
  return result;
}

bool fq_is_squarefree(const FiniteFieldExt& k, const FqPoly& a) {
  if (a.degree() <= 0) return !a.c.empty();
  FqPoly d = fq_derivative(k, a);
  if (d.c.empty()) return false;
  return fq_gcd(k, a, d).degree() == 0;
}

std::vector<int> fq_factor_degrees(const FiniteFieldExt& k, const FqPoly& a) {
  std::vector<int> degrees;
  FqPoly rest = fq_monic(k, a);
  FqPoly y{{k.zero(), k.one()}};
  FqPoly h = fq_rem(k, y, rest);
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = fq_powmod(k, h, k.q(), rest);
    FqPoly g = fq_gcd(k, rest, fq_sub(k, h, y));
    if (g.degree() > 0) {
      for (int j = 0; j < g.degree() / d; ++j) degrees.push_back(d);
      rest = fq_div(k, rest, g);
      h = fq_rem(k, h, rest);
    }
  }
  if (rest.degree() > 0) degrees.push_back(rest.degree());
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace adelic::detail
