#pragma once

#include "adelic/number_field.hpp"
#include "adelic/poly.hpp"

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace adelic {

/// Lifts f = g h (mod p), g and h monic and coprime mod p, to a factorization
/// modulo p^k. Returns the lifted (g, h) with modulus p^k.
std::pair<ModPoly, ModPoly> hensel_lift(const IntPoly& f, const ModPoly& g, const ModPoly& h,
                                        unsigned k);

/// Local data for one prime P above p.
struct LocalPrime {
  int e;
  int f;
  /// Eisenstein polynomial of a uniformizer of K_P modulo p^k, when the
  /// completion is totally ramified and such a presentation was found.
  std::optional<ModPoly> eisenstein;
  friend bool operator==(const LocalPrime&, const LocalPrime&) = default;
};

/// Primes above p with their (e, f) and, for e > 1 and f = 1, an
/// Eisenstein presentation when one is derivable from a Hensel factor of
/// the minimal polynomial. The list is sorted by (f, e). Returns nullopt
/// when the decomposition at p is Undetermined.
std::optional<std::vector<LocalPrime>> local_primes(const NumberField& field, const mpz_class& p,
                                                    long precision, unsigned lift_exponent);

}  // namespace adelic
