#pragma once

#include "adelic/number_field.hpp"
#include "adelic/splitting.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace adelic {

/// The sets P_K(A) = { p <= bound : splitting type of p is A }.
struct SplittingSpectrum {
  NumberField field;
  std::int64_t bound = 0;
  std::map<SplittingType, std::vector<std::int64_t>> entries;
  std::vector<std::int64_t> excluded;  ///< primes whose decomposition is Undetermined
};

/// Decomposes every prime <= bound and groups them by splitting type.
SplittingSpectrum spectrum(const NumberField& field, std::int64_t bound, long precision = 0);

/// Real and complex places: r1 + 2 r2 = [K:Q].
struct Signature {
  int real_count = 0;
  int complex_count = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const NumberField& field);

struct DegreeDetection {
  int degree;
  std::int64_t witness;
  friend bool operator==(const DegreeDetection&, const DegreeDetection&) = default;
};

/// Least good prime p <= bound that splits completely; the number of primes
/// above it is the detected degree. nullopt when no such prime is found.
std::optional<DegreeDetection> degree_via_split_prime(const NumberField& field,
                                                      std::int64_t bound);

/// Good primes p <= bound with a single unramified prime of residue degree 1
/// above them. Nonempty only for the rational field.
std::vector<std::int64_t> aq_distinguisher(const NumberField& field, std::int64_t bound);

/// Local Euler factor prod_j (1 - p^{-f_j s})^{-1}.
struct ZetaLocalFactor {
  mpz_class prime;
  SplittingType residue_degrees;

  /// Number of ideals of norm p^k for k = 0..max_power: the coefficients of
  /// prod_j (1 - T^{f_j})^{-1}.
  std::vector<std::uint64_t> ideal_counts(int max_power) const;
  friend bool operator==(const ZetaLocalFactor&, const ZetaLocalFactor&) = default;
};

/// Throws UnresolvedPrime if the decomposition at p is Undetermined.
ZetaLocalFactor zeta_local_factor(const NumberField& field, const mpz_class& p);

/// a_1 .. a_N of the Dedekind zeta function (index n - 1 holds a_n).
/// Throws UnresolvedPrime when a needed decomposition is Undetermined.
std::vector<std::uint64_t> zeta_partial_coefficients(const NumberField& field, std::int64_t n);

/// Coefficients a_1 .. a_N of the Euler product restricted to the given
/// primes; a_n = 0 whenever n has a prime factor outside the set.
std::vector<std::uint64_t> euler_product_coefficients(const NumberField& field, std::int64_t n,
                                                      std::span<const std::int64_t> primes);

/// Bounded arithmetic-equivalence certificate.
struct ArithEquivVerdict {
  enum class Kind { NotEquivalent, EquivalentUpToBound };

  Kind kind = Kind::EquivalentUpToBound;
  std::int64_t bound = 0;
  std::optional<std::int64_t> witness;  ///< NotEquivalent only
  SplittingType type_k;                 ///< NotEquivalent only
  SplittingType type_l;                 ///< NotEquivalent only
  std::size_t compared_count = 0;
  std::vector<std::int64_t> excluded_primes;
  bool degree_check = false;

  friend bool operator==(const ArithEquivVerdict&, const ArithEquivVerdict&) = default;
};

const char* to_string(ArithEquivVerdict::Kind kind);

/// Compares splitting types at every prime <= bound that is good for both
/// fields. The first mismatch is the witness.
ArithEquivVerdict arithmetic_equiv(const NumberField& k, const NumberField& l,
                                   std::int64_t bound);

/// Least integer s with s > p/(p-1) + v_p(e) e.
int keating_bound(const mpz_class& p, int e);

}  // namespace adelic
