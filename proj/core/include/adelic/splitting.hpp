#pragma once

#include "adelic/newton_polygon.hpp"
#include "adelic/number_field.hpp"
#include "adelic/poly.hpp"

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace adelic {

/// One prime P above p, with ramification index e and residue degree f.
/// Ordered by (f, e), the canonical order for factor lists.
struct PrimeFactor {
  int e;
  int f;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
  friend auto operator<=>(const PrimeFactor& a, const PrimeFactor& b) {
    if (auto c = a.f <=> b.f; c != 0) return c;
    return a.e <=> b.e;
  }
};

enum class DecompositionStatus { Resolved, Undetermined };
enum class DecompositionMethod { Kummer, NewtonPolygon };

const char* to_string(DecompositionMethod method);

/// p O_K = P_1^{e_1} ... P_g^{e_g}, or Undetermined with a reason.
struct PrimeDecomposition {
  mpz_class prime;
  DecompositionStatus status = DecompositionStatus::Undetermined;
  DecompositionMethod method = DecompositionMethod::Kummer;
  std::vector<PrimeFactor> factors;  ///< sorted by (f, e); empty when Undetermined
  std::string reason;                ///< why the decomposition is Undetermined

  bool resolved() const noexcept { return status == DecompositionStatus::Resolved; }
  /// sum of e_i f_i
  int degree_sum() const;
  /// "(e,f)(e,f)..." in factor order
  std::string factors_string() const;
  friend bool operator==(const PrimeDecomposition&, const PrimeDecomposition&) = default;
};

/// Nondecreasing residue degrees (f_1, ..., f_g); ramification is dropped.
struct SplittingType {
  std::vector<int> residue_degrees;

  int sum() const;
  /// "(1,1)" style rendering
  std::string to_string() const;
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;
};

/// p does not divide the polynomial discriminant.
bool good_prime_test(const NumberField& field, const mpz_class& p);

/// Dedekind's criterion: true iff p divides the index [O_K : Z[alpha]].
/// Requires p | poly_disc.
bool dedekind_index_test(const NumberField& field, const mpz_class& p);

/// Factor the minimal polynomial modulo p; each irreducible factor with
/// multiplicity e and degree f gives a prime (e, f). Valid when p is good or
/// p does not divide the index; throws PreconditionError otherwise.
PrimeDecomposition kummer_decompose(const NumberField& field, const mpz_class& p);

/// Default p-adic working precision 2 (1 + v_p(disc)) + 4.
long default_precision(const NumberField& field, const mpz_class& p);

/// phi-adic Newton polygon data for one irreducible factor phi of f mod p.
struct OreBranch {
  IntPoly phi;                     ///< monic lift of the residual factor
  unsigned multiplicity = 0;       ///< exponent of phi in f mod p
  std::vector<NewtonSegment> segments;  ///< principal part; empty when multiplicity == 1
  /// Per segment, the residue degrees over F_{p^deg phi} of the irreducible
  /// factors of the residual polynomial. Empty inner vector when that
  /// residual polynomial is inseparable.
  std::vector<std::vector<int>> residual_degrees;
  bool regular = true;
};

/// One-level Ore analysis of f at p using phi-adic expansions of f modulo
/// p^precision. Throws InsufficientPrecision.
std::vector<OreBranch> ore_branches(const NumberField& field, const mpz_class& p,
                                    long precision);

/// Decomposition from the one-level Newton polygon analysis; Undetermined
/// when some residual polynomial is inseparable (the non-regular case).
/// Throws InsufficientPrecision.
PrimeDecomposition ore_local_decompose(const NumberField& field, const mpz_class& p,
                                       long precision);

/// Dispatcher: Kummer at good primes. At bad primes, Ore analysis first,
/// doubling the precision up to four times; when that stays inconclusive
/// and Dedekind rules out index division, Kummer. A precision of 0 selects
/// default_precision. Results are cached per (field, prime, precision).
PrimeDecomposition decompose(const NumberField& field, const mpz_class& p, long precision = 0);

/// Residue degrees of a resolved decomposition, sorted.
/// Throws UnresolvedPrime for an Undetermined decomposition.
SplittingType splitting_type(const PrimeDecomposition& decomposition);

/// Drops all cached decompositions.
void clear_decomposition_cache();

}  // namespace adelic
