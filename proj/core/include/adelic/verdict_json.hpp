#pragma once

#include "adelic/adele_iso.hpp"
#include "adelic/invariants.hpp"
#include "adelic/splitting.hpp"

#include <nlohmann/json.hpp>

namespace adelic {

// Verdicts share the keys kind, witness, matching, excluded_primes, bound;
// the remaining keys are verdict-specific. Integers too large for int64 are
// written as decimal strings.

void to_json(nlohmann::json& j, const SplittingType& t);
void from_json(const nlohmann::json& j, SplittingType& t);

void to_json(nlohmann::json& j, const PrimeDecomposition& d);
void from_json(const nlohmann::json& j, PrimeDecomposition& d);

void to_json(nlohmann::json& j, const SplittingSpectrum& s);

void to_json(nlohmann::json& j, const Signature& s);

void to_json(nlohmann::json& j, const ArithEquivVerdict& v);
void from_json(const nlohmann::json& j, ArithEquivVerdict& v);

void to_json(nlohmann::json& j, const LocalDatum& d);
void from_json(const nlohmann::json& j, LocalDatum& d);

void to_json(nlohmann::json& j, const LocalMatch& m);
void from_json(const nlohmann::json& j, LocalMatch& m);

void to_json(nlohmann::json& j, const AdeleIsoVerdict& v);
void from_json(const nlohmann::json& j, AdeleIsoVerdict& v);

}  // namespace adelic
