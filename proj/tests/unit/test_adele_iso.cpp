#include <adelic/adele_iso.hpp>
#include <adelic/errors.hpp>
#include <adelic/verdict_json.hpp>
#include <adelic_cli/corpus.hpp>

#include <gtest/gtest.h>

using namespace adelic;
using Kind = AdeleIsoVerdict::Kind;

namespace {

NumberField field(const char* poly) { return NumberField(parse_poly(poly)); }

}  // namespace

TEST(AdeleIso, Examples) {
  const auto k = field("x^2 - 2");
  const auto same = adele_iso_verdict(k, k, 100);
  EXPECT_EQ(same.kind, Kind::IsomorphicCertified);
  ASSERT_EQ(same.matching.size(), 1u);
  EXPECT_EQ(same.matching[0].k, same.matching[0].l);
  EXPECT_TRUE(same.matching[0].certified);

  const auto diff = adele_iso_verdict(k, field("x^2 - 3"), 100);
  EXPECT_EQ(diff.kind, Kind::NotIsomorphic);
  EXPECT_EQ(diff.witness, 7);

  // At bound 3 no good prime separates them, so the archimedean stage decides.
  const auto sig = adele_iso_verdict(k, field("x^2 + 1"), 3);
  EXPECT_EQ(sig.kind, Kind::NotIsomorphic);
  EXPECT_FALSE(sig.witness.has_value());
  EXPECT_NE(sig.reason.find("signature"), std::string::npos) << sig.reason;
  // and a witness prime does exist further out
  EXPECT_TRUE(adele_iso_verdict(k, field("x^2 + 1"), 100).witness.has_value());
}

TEST(AdeleIso, ReflexiveOverLowDegreeCorpus) {
  for (const auto& cf : adelic::cli::corpus()) {
    const auto k = cf.field();
    if (k.degree() > 4) continue;
    const auto v = adele_iso_verdict(k, k, 100);
    EXPECT_TRUE(v.kind == Kind::IsomorphicCertified || v.kind == Kind::IsomorphicModuloAssumption)
        << cf.poly << ": " << to_string(v.kind) << " " << v.reason;
  }
}

TEST(AdeleIso, DegreeSevenPairNeedsTheLocalAssumption) {
  const auto v = adele_iso_verdict(field("x^7 - 7*x + 3"),
                                   field("x^7 + 14*x^4 - 42*x^2 - 21*x + 9"), 200);
  EXPECT_EQ(v.kind, Kind::IsomorphicModuloAssumption) << v.reason;
  EXPECT_FALSE(v.unmatched.empty());
  EXPECT_EQ(v.assumption_note, kLocalFieldAssumption);
}

TEST(AdeleIso, DifferentRamificationIsNotIsomorphic) {
  // The good primes up to 3 agree; at the bad prime 2 one field is ramified
  // and the other inert.
  const auto v = adele_iso_verdict(field("x^2 - 2"), field("x^2 - 5"), 3);
  EXPECT_EQ(v.kind, Kind::NotIsomorphic) << v.reason;
}

TEST(VerdictJson, AdeleIsoRoundTrips) {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"x^2 - 2", "x^2 - 2"}, {"x^2 - 2", "x^2 - 3"}, {"x^3 - 2", "x^3 - 2"},
      {"x^7 - 7*x + 3", "x^7 + 14*x^4 - 42*x^2 - 21*x + 9"}};
  for (auto [a, b] : pairs) {
    const auto v = adele_iso_verdict(field(a), field(b), 200);
    const nlohmann::json j = v;
    for (const char* key : {"kind", "witness", "matching", "excluded_primes", "bound"})
      EXPECT_TRUE(j.contains(key)) << key;
    const auto back = nlohmann::json::parse(j.dump()).get<AdeleIsoVerdict>();
    EXPECT_EQ(back, v) << j.dump();
  }
}

TEST(VerdictJson, ArithEquivAndDecompositionRoundTrip) {
  const auto v = arithmetic_equiv(field("x^2 - 2"), field("x^2 - 3"), 100);
  const nlohmann::json j = v;
  EXPECT_EQ(j["kind"], "NotEquivalent");
  EXPECT_EQ(j["witness"], 7);
  EXPECT_EQ(nlohmann::json::parse(j.dump()).get<ArithEquivVerdict>(), v);

  const auto d = decompose(field("x^2 - 2"), 2);
  EXPECT_EQ(nlohmann::json(d).get<PrimeDecomposition>(), d);
}

TEST(VerdictJson, UnknownKindIsRejected) {
  nlohmann::json j = adele_iso_verdict(field("x^2 - 2"), field("x^2 - 2"), 10);
  j["kind"] = "Maybe";
  EXPECT_THROW(j.get<AdeleIsoVerdict>(), ParseError);
}
