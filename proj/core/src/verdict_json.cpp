#include "adelic/verdict_json.hpp"

#include "adelic/errors.hpp"

namespace adelic {

using nlohmann::json;

namespace {

json big(const mpz_class& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

mpz_class read_big(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(static_cast<long>(j.get<std::int64_t>()));
}

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::int64_t> read_optional_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::int64_t>();
}

}  // namespace

void to_json(json& j, const SplittingType& t) { j = t.residue_degrees; }

void from_json(const json& j, SplittingType& t) { t.residue_degrees = j.get<std::vector<int>>(); }

void to_json(json& j, const PrimeDecomposition& d) {
  json factors = json::array();
  for (const auto& pf : d.factors) factors.push_back({pf.e, pf.f});
  j = {{"prime", big(d.prime)},
       {"status", d.resolved() ? "Resolved" : "Undetermined"},
       {"method", to_string(d.method)},
       {"factors", factors},
       {"reason", d.reason}};
}

void from_json(const json& j, PrimeDecomposition& d) {
  d.prime = read_big(j.at("prime"));
  const auto status = j.at("status").get<std::string>();
  d.status = status == "Resolved" ? DecompositionStatus::Resolved : DecompositionStatus::Undetermined;
  const auto method = j.at("method").get<std::string>();
  d.method = method == "Kummer" ? DecompositionMethod::Kummer : DecompositionMethod::NewtonPolygon;
  d.factors.clear();
  for (const auto& pf : j.at("factors")) d.factors.push_back({pf.at(0).get<int>(), pf.at(1).get<int>()});
  d.reason = j.value("reason", "");
}

void to_json(json& j, const SplittingSpectrum& s) {
  json entries = json::array();
  for (const auto& [type, primes] : s.entries) entries.push_back({{"type", type}, {"primes", primes}});
  j = {{"field", s.field.min_poly().to_string()},
       {"label", s.field.label()},
       {"bound", s.bound},
       {"entries", entries},
       {"excluded", s.excluded}};
}

void to_json(json& j, const Signature& s) {
  j = {{"real_count", s.real_count}, {"complex_count", s.complex_count}};
}

void to_json(json& j, const ArithEquivVerdict& v) {
  const bool witnessed = v.kind == ArithEquivVerdict::Kind::NotEquivalent;
  j = {{"kind", to_string(v.kind)},
       {"witness", optional_int(v.witness)},
       {"matching", json::array()},
       {"excluded_primes", v.excluded_primes},
       {"bound", v.bound},
       {"type_K", witnessed ? json(v.type_k) : json(nullptr)},
       {"type_L", witnessed ? json(v.type_l) : json(nullptr)},
       {"compared_count", v.compared_count},
       {"degree_check", v.degree_check}};
}

void from_json(const json& j, ArithEquivVerdict& v) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "NotEquivalent") {
    v.kind = ArithEquivVerdict::Kind::NotEquivalent;
  } else if (kind == "EquivalentUpToBound") {
    v.kind = ArithEquivVerdict::Kind::EquivalentUpToBound;
  } else {
    throw ParseError("unknown verdict kind " + kind, 0, 0);
  }
  v.witness = read_optional_int(j, "witness");
  v.excluded_primes = j.at("excluded_primes").get<std::vector<std::int64_t>>();
  v.bound = j.at("bound").get<std::int64_t>();
  v.type_k = j.at("type_K").is_null() ? SplittingType{} : j.at("type_K").get<SplittingType>();
  v.type_l = j.at("type_L").is_null() ? SplittingType{} : j.at("type_L").get<SplittingType>();
  v.compared_count = j.at("compared_count").get<std::size_t>();
  v.degree_check = j.at("degree_check").get<bool>();
}

void to_json(json& j, const LocalDatum& d) {
  j = {{"prime", big(d.prime)}, {"e", d.e}, {"f", d.f}};
}

void from_json(const json& j, LocalDatum& d) {
  d.prime = read_big(j.at("prime"));
  d.e = j.at("e").get<int>();
  d.f = j.at("f").get<int>();
}

void to_json(json& j, const LocalMatch& m) {
  j = {{"K", m.k}, {"L", m.l}, {"certified", m.certified}, {"truncation", m.truncation}};
}

void from_json(const json& j, LocalMatch& m) {
  m.k = j.at("K").get<LocalDatum>();
  m.l = j.at("L").get<LocalDatum>();
  m.certified = j.at("certified").get<bool>();
  m.truncation = j.at("truncation").get<int>();
}

void to_json(json& j, const AdeleIsoVerdict& v) {
  j = {{"kind", to_string(v.kind)},
       {"witness", optional_int(v.witness)},
       {"matching", v.matching},
       {"excluded_primes", v.excluded_primes},
       {"bound", v.bound},
       {"reason", v.reason},
       {"unmatched", v.unmatched},
       {"assumption_note", v.assumption_note}};
}

void from_json(const json& j, AdeleIsoVerdict& v) {
  const auto kind = j.at("kind").get<std::string>();
  using K = AdeleIsoVerdict::Kind;
  if (kind == "NotIsomorphic") {
    v.kind = K::NotIsomorphic;
  } else if (kind == "IsomorphicCertified") {
    v.kind = K::IsomorphicCertified;
  } else if (kind == "IsomorphicModuloAssumption") {
    v.kind = K::IsomorphicModuloAssumption;
  } else if (kind == "Undetermined") {
    v.kind = K::Undetermined;
  } else {
    throw ParseError("unknown verdict kind " + kind, 0, 0);
  }
  v.witness = read_optional_int(j, "witness");
  v.matching = j.at("matching").get<std::vector<LocalMatch>>();
  v.excluded_primes = j.at("excluded_primes").get<std::vector<std::int64_t>>();
  v.bound = j.at("bound").get<std::int64_t>();
  v.reason = j.value("reason", "");
  v.unmatched = j.value("unmatched", std::vector<LocalMatch>{});
  v.assumption_note = j.value("assumption_note", "");
}

}  // namespace adelic
