#pragma once

// Polynomials over F_q = F_p[t]/(phi) for residual-polynomial analysis.

#include "adelic/poly.hpp"

#include <gmpxx.h>

#include <vector>

namespace adelic::detail {

class FiniteFieldExt {
 public:
  /// phi monic irreducible over F_p.
  explicit FiniteFieldExt(ModPoly phi);

  const mpz_class& p() const { return phi_.modulus(); }
  const mpz_class& q() const { return q_; }
  int degree() const { return phi_.degree(); }

  ModPoly zero() const { return ModPoly(p(), {}); }
  ModPoly one() const { return ModPoly::constant(1, p()); }
  ModPoly reduce(const ModPoly& a) const;
  ModPoly mul(const ModPoly& a, const ModPoly& b) const;
  ModPoly inverse(const ModPoly& a) const;

 private:
  ModPoly phi_;
  mpz_class q_;
};

/// Dense polynomial with F_q coefficients, constant term first, no
/// trailing zeros.
struct FqPoly {
  std::vector<ModPoly> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

FqPoly fq_normalize(FqPoly a);
FqPoly fq_sub(const FiniteFieldExt& k, const FqPoly& a, const FqPoly& b);
FqPoly fq_mul(const FiniteFieldExt& k, const FqPoly& a, const FqPoly& b);
FqPoly fq_rem(const FiniteFieldExt& k, const FqPoly& a, const FqPoly& b);
FqPoly fq_div(const FiniteFieldExt& k, const FqPoly& a, const FqPoly& b);
FqPoly fq_gcd(const FiniteFieldExt& k, FqPoly a, FqPoly b);
FqPoly fq_derivative(const FiniteFieldExt& k, const FqPoly& a);
FqPoly fq_powmod(const FiniteFieldExt& k, const FqPoly& base, const mpz_class& e,
                 const FqPoly& modulus);

bool fq_is_squarefree(const FiniteFieldExt& k, const FqPoly& a);

/// Degrees of the irreducible factors of a squarefree polynomial, ascending
/// with multiplicity (distinct-degree factorization over F_q).
std::vector<int> fq_factor_degrees(const FiniteFieldExt& k, const FqPoly& a);

}  // namespace adelic::detail
