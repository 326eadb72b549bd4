#include "adelic/fv/family.hpp"

#include "adelic/errors.hpp"
#include "adelic/poly.hpp"
#include "adelic/residue_ring.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace adelic::fv {

using nlohmann::json;

FiniteFamily::FiniteFamily(std::vector<std::string> index, std::vector<FiniteRing> stalks)
    : index_(std::move(index)), stalks_(std::move(stalks)) {
  if (index_.empty()) throw PreconditionError("FiniteFamily: index set must be nonempty");
  if (index_.size() > kMaxIndexSize) {
    throw CapExceeded("FiniteFamily: index set larger than " + std::to_string(kMaxIndexSize));
  }
  if (index_.size() != stalks_.size()) throw PreconditionError("FiniteFamily: one stalk per index");
  if (std::set<std::string>(index_.begin(), index_.end()).size() != index_.size()) {
    throw PreconditionError("FiniteFamily: duplicate index label");
  }
}

IndexSet FiniteFamily::full() const noexcept {
  return {static_cast<std::uint32_t>((std::uint64_t{1} << index_.size()) - 1)};
}

std::vector<std::string> FiniteFamily::labels(IndexSet s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < index_.size(); ++i) {
    if (s.bits >> i & 1u) out.push_back(index_[i]);
  }
  return out;
}

IndexSet FiniteFamily::subset(const std::vector<std::string>& labels) const {
  IndexSet s;
  for (const auto& l : labels) {
    auto it = std::find(index_.begin(), index_.end(), l);
    if (it == index_.end()) throw PreconditionError("unknown index label '" + l + "'");
    s.bits |= 1u << (it - index_.begin());
  }
  return s;
}

namespace {

template <class T>
T field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"", 0, 0);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + ": bad value for \"" + key + "\"", 0, 0);
  }
}

std::vector<FiniteRing::Element> table(const json& j, const char* key, const std::string& where) {
  const json& t = j.contains(key) ? j.at(key) : json();
  std::vector<FiniteRing::Element> out;
  try {
    if (!t.is_array()) throw ParseError(where + ": \"" + key + "\" must be an array", 0, 0);
    for (const auto& row : t) {
      if (row.is_array()) {
        for (const auto& v : row) out.push_back(v.get<FiniteRing::Element>());
      } else {
        out.push_back(row.get<FiniteRing::Element>());
      }
    }
  } catch (const json::exception&) {
    throw ParseError(where + ": bad entries in \"" + key + "\"", 0, 0);
  }
  return out;
}

FiniteRing stalk_from_json(const json& j, const std::string& label) {
  const std::string where = "stalk " + label;
  if (!j.is_object()) throw ParseError(where + ": expected an object", 0, 0);
  const auto kind = field<std::string>(j, "kind", where);
  FiniteRing ring = [&] {
    if (kind == "Zmod") return FiniteRing::integers_mod(field<std::uint32_t>(j, "m", where));
    if (kind == "GF") {
      return FiniteRing::galois_field(field<std::uint32_t>(j, "p", where), field<int>(j, "f", where));
    }
    if (kind == "Residue") {
      const mpz_class p(field<unsigned long>(j, "p", where));
      const int e = field<int>(j, "e", where);
      const int f = field<int>(j, "f", where);
      const int s = field<int>(j, "s", where);
      std::optional<ModPoly> local;
      if (j.contains("local_factor")) {
        const IntPoly poly = parse_poly(field<std::string>(j, "local_factor", where));
        mpz_class modulus;
        mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>((s + e - 1) / e + 1));
        local = ModPoly(poly, modulus);
      }
      auto built = residue_ring_construct(p, e, f, local, s);
      if (auto* u = std::get_if<Undetermined>(&built)) {
        throw PreconditionError(where + ": residue ring unavailable (" + u->reason + "): " + u->detail);
      }
      return FiniteRing::from_residue_ring(std::get<ResidueRing>(built));
    }
    if (kind == "Tables") {
      return FiniteRing::from_tables(label, field<std::uint32_t>(j, "size", where),
                                     table(j, "add", where), table(j, "mul", where),
                                     field<FiniteRing::Element>(j, "zero", where),
                                     field<FiniteRing::Element>(j, "one", where));
    }
    throw ParseError(where + ": unknown kind \"" + kind + "\"", 0, 0);
  }();
  if (j.contains("relabel")) {
    const auto perm = field<std::vector<FiniteRing::Element>>(j, "relabel", where);
    ring = ring.relabeled(perm);
  }
  return ring;
}

}  // namespace

FiniteFamily FiniteFamily::from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("family JSON: ") + e.what(), 0, e.byte);
  }
  if (!doc.is_object()) throw ParseError("family JSON: expected an object", 0, 0);
  const auto index = field<std::vector<std::string>>(doc, "index", "family");
  if (!doc.contains("stalks") || !doc.at("stalks").is_object()) {
    throw ParseError("family: missing \"stalks\" object", 0, 0);
  }
  const json& stalks = doc.at("stalks");
  std::vector<FiniteRing> rings;
  for (const auto& label : index) {
    if (!stalks.contains(label)) throw ParseError("family: no stalk for index '" + label + "'", 0, 0);
    rings.push_back(stalk_from_json(stalks.at(label), label));
  }
  if (stalks.size() != index.size()) throw ParseError("family: stalk without an index label", 0, 0);
  return FiniteFamily(index, std::move(rings));
}

}  // namespace adelic::fv
