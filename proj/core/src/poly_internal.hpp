#pragma once

#include <gmpxx.h>

namespace adelic::detail {

/// Primality with a small per-thread memo; moduli repeat heavily in sweeps.
bool is_prime_modulus(const mpz_class& m);

/// Nonnegative residue of a modulo m.
inline mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace adelic::detail
