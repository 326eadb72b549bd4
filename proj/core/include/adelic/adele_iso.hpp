#pragma once

#include "adelic/invariants.hpp"
#include "adelic/number_field.hpp"
#include "adelic/residue_ring.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adelic {

/// (e, f) of one prime above p.
struct LocalDatum {
  mpz_class prime;
  int e = 1;
  int f = 1;
  friend bool operator==(const LocalDatum&, const LocalDatum&) = default;
};

/// A pair of completions matched at a bad prime.
struct LocalMatch {
  LocalDatum k;
  LocalDatum l;
  bool certified = false;  ///< residue rings at the Keating level are isomorphic
  int truncation = 0;      ///< the level s used for certification
  friend bool operator==(const LocalMatch&, const LocalMatch&) = default;
};

struct AdeleIsoVerdict {
  enum class Kind { NotIsomorphic, IsomorphicCertified, IsomorphicModuloAssumption, Undetermined };

  Kind kind = Kind::Undetermined;
  std::string reason;
  std::int64_t bound = 0;
  std::optional<std::int64_t> witness;  ///< prime with differing splitting types
  std::vector<LocalMatch> matching;
  std::vector<LocalMatch> unmatched;    ///< pairs matched on (e, f) only
  std::string assumption_note;
  std::vector<std::int64_t> excluded_primes;

  friend bool operator==(const AdeleIsoVerdict&, const AdeleIsoVerdict&) = default;
};

const char* to_string(AdeleIsoVerdict::Kind kind);

inline constexpr const char* kLocalFieldAssumption =
    "(e, f) determines the local field among candidates present";

/// Decides A_K = A_L in stages: bounded arithmetic equivalence, signatures,
/// then a bijection of completions at every prime dividing either polynomial
/// discriminant, certified through residue rings O/pi^s at the Keating
/// level where the local shape has a supported presentation.
AdeleIsoVerdict adele_iso_verdict(const NumberField& k, const NumberField& l, std::int64_t bound,
                                  long precision = 0,
                                  std::uint64_t ring_order_cap = kDefaultRingOrderCap);

}  // namespace adelic
