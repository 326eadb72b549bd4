#pragma once

#include "adelic/poly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace adelic {

/// Monic scalar multiple of a over F_p. a must be nonzero.
ModPoly make_monic(const ModPoly& a);

/// Monic gcd over F_p; gcd(a, 0) is a made monic and gcd(0, 0) is 0.
/// Throws ModulusError for a composite modulus.
ModPoly gcd_modp(const ModPoly& a, const ModPoly& b);

/// Extended gcd over F_p: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  ModPoly gcd;
  ModPoly s;
  ModPoly t;
};
ExtendedGcd extended_gcd_modp(const ModPoly& a, const ModPoly& b);

/// base^exponent mod modulus, for any modulus ring where modulus is monic.
ModPoly powmod(const ModPoly& base, const mpz_class& exponent, const ModPoly& modulus);

bool is_squarefree_modp(const ModPoly& a);

struct SquarefreePart {
  ModPoly part;
  unsigned multiplicity;
  friend bool operator==(const SquarefreePart&, const SquarefreePart&) = default;
};

/// a = prod part^multiplicity with parts monic, squarefree and pairwise
/// coprime; sorted by multiplicity. Handles p-th powers in characteristic p.
std::vector<SquarefreePart> squarefree_decomposition(const ModPoly& a);

/// Distinct-degree factorization of a monic squarefree polynomial. Maps
/// d to the number of irreducible factors of degree d.
std::map<int, int> ddf(const ModPoly& a);

/// Degree-d products of the distinct-degree factorization, d ascending.
std::vector<std::pair<int, ModPoly>> ddf_parts(const ModPoly& a);

/// Complete factorization of a monic squarefree polynomial into monic
/// irreducibles (Cantor-Zassenhaus equal-degree splitting). The random
/// splitting polynomials come from a GMP generator seeded with `seed`; the
/// returned list is sorted canonically, so it does not depend on the seed.
std::vector<ModPoly> cz_factor(const ModPoly& a, std::uint64_t seed);

/// Seed derived from the modulus and coefficient sequence.
std::uint64_t derived_seed(const ModPoly& a);

struct IrreducibleFactor {
  ModPoly factor;
  unsigned multiplicity;
};

/// Full factorization of a monic polynomial over F_p, factors sorted
/// canonically, using the derived seed.
std::vector<IrreducibleFactor> factor_modp(const ModPoly& a);

bool is_irreducible_modp(const ModPoly& a);

/// First monic irreducible of degree d over F_p when candidates are ordered
/// by the integer sum_{i<d} c_i p^i of their lower coefficients.
ModPoly irreducible_modp(const mpz_class& p, int d);

}  // namespace adelic
