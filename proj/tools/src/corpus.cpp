#include <adelic_cli/corpus.hpp>

#include <adelic/adele_iso.hpp>
#include <adelic/fv/evaluate.hpp>
#include <adelic/fv/parser.hpp>
#include <adelic/invariants.hpp>
#include <adelic/primes.hpp>
#include <adelic/residue_ring.hpp>
#include <adelic/splitting.hpp>

#include <sstream>

namespace adelic::cli {

NumberField CorpusField::field() const { return NumberField(parse_poly(poly), label); }

const std::vector<CorpusField>& corpus() {
  static const std::vector<CorpusField> fields = {
      {"x", "Q", 2},
      {"x^2 - 2", "Q(sqrt 2)", 7},
      {"x^2 - 3", "Q(sqrt 3)", 11},
      {"x^2 + 1", "Q(i)", 5},
      {"x^2 + x + 1", "Q(zeta_3)", 7},
      {"x^2 - 5", "Q(sqrt 5)", 11},
      {"x^2 + 5", "Q(sqrt -5)", 3},
      {"x^3 - x - 1", "cubic disc -23", 59},
      {"x^3 - 2", "Q(2^(1/3))", 31},
      {"x^3 - x^2 - 2*x - 8", "Dedekind cubic", 59},
      {"x^3 + x^2 - 2*x - 1", "Q(zeta_7)^+", 13},
      {"x^3 - 3*x - 1", "Q(zeta_9)^+", 17},
      {"x^4 + 1", "Q(zeta_8)", 17},
      {"x^4 - 2", "Q(2^(1/4))", 73},
      {"x^4 - x - 1", "S4 quartic", 83},
      {"x^4 + x^3 + x^2 + x + 1", "Q(zeta_5)", 11},
      {"x^5 - 2", "Q(2^(1/5))", 151},
      {"x^6 + x^3 + 1", "Q(zeta_9)", 19},
      {"x^6 - 3", "Q(3^(1/6))", 61},
      {"x^7 - 7*x + 3", "Trinks K", 1879},
      {"x^7 + 14*x^4 - 42*x^2 - 21*x + 9", "Trinks L", 1879},
      {"x^8 + 1", "Q(zeta_16)", 17},
      {"x^8 - 3", "Q(3^(1/8))", 313},
  };
  return fields;
}

namespace {

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool pass, const std::string& detail) {
    out_ << (pass ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) out_ << "  " << detail;
    out_ << '\n';
    ++total_;
    if (pass) ++passed_;
  }

  bool finish() {
    out_ << passed_ << "/" << total_ << " golden checks passed\n";
    return passed_ == total_;
  }

 private:
  std::ostream& out_;
  int total_ = 0;
  int passed_ = 0;
};

NumberField field(const char* poly) { return NumberField(parse_poly(poly)); }

std::string sig_string(const Signature& s) {
  return "(" + std::to_string(s.real_count) + "," + std::to_string(s.complex_count) + ")";
}

void identity_checks(Report& r) {
  const auto primes = primes_up_to(200);
  for (const auto& cf : corpus()) {
    const NumberField k = cf.field();
    int resolved = 0;
    bool ok = true;
    for (auto p : primes) {
      const auto d = decompose(k, mpz_class(static_cast<long>(p)));
      if (!d.resolved()) continue;
      ++resolved;
      ok = ok && d.degree_sum() == k.degree();
    }
    r.check("identity " + cf.poly, ok,
            std::to_string(resolved) + "/" + std::to_string(primes.size()) + " primes resolved");
  }
}

void split_checks(Report& r) {
  struct Golden {
    const char* poly;
    long p;
    const char* factors;
    const char* method;
  };
  const Golden goldens[] = {
      {"x^2 - 2", 7, "(1,1)(1,1)", "Kummer"},
      {"x^2 - 2", 2, "(2,1)", "NewtonPolygon"},
      {"x^2 - 2", 3, "(1,2)", "Kummer"},
      {"x", 5, "(1,1)", "Kummer"},
      {"x^2 - 3", 3, "(2,1)", "NewtonPolygon"},
      {"x^2 - 5", 2, "(1,2)", "NewtonPolygon"},
      {"x^3 - x^2 - 2*x - 8", 2, "(1,1)(1,1)(1,1)", "NewtonPolygon"},
  };
  for (const auto& g : goldens) {
    const auto d = decompose(field(g.poly), mpz_class(g.p));
    const std::string got = d.factors_string() + " via " + to_string(d.method);
    r.check(std::string("split ") + g.poly + " at " + std::to_string(g.p),
            got == std::string(g.factors) + " via " + g.method, got);
  }
}

void invariant_checks(Report& r) {
  const std::pair<const char*, Signature> sigs[] = {
      {"x^2 - 2", {2, 0}}, {"x^2 + 1", {0, 1}}, {"x^3 - x - 1", {1, 1}}};
  for (const auto& [poly, want] : sigs) {
    const auto got = signature(field(poly));
    r.check(std::string("signature ") + poly, got == want, sig_string(got));
  }
  for (const auto& cf : corpus()) {
    const NumberField k = cf.field();
    const auto bound = std::max<std::int64_t>(1000, cf.least_split_prime);
    const auto d = degree_via_split_prime(k, bound);
    const bool ok = d && d->degree == k.degree() && d->witness == cf.least_split_prime;
    r.check("degree " + cf.poly, ok,
            d ? "degree " + std::to_string(d->degree) + " witness " + std::to_string(d->witness) +
                    " (B=" + std::to_string(bound) + ")"
              : "no split prime up to " + std::to_string(bound));
  }
  for (const auto& cf : corpus()) {
    const NumberField k = cf.field();
    const auto list = aq_distinguisher(k, 100);
    const bool ok = (k.degree() == 1) == !list.empty();
    r.check("distinguisher " + cf.poly, ok, std::to_string(list.size()) + " primes up to 100");
  }
  r.check("keating (3,1) (2,2)", keating_bound(3, 1) == 2 && keating_bound(2, 2) == 5,
          std::to_string(keating_bound(3, 1)) + " " + std::to_string(keating_bound(2, 2)));
}

void equivalence_checks(Report& r) {
  const auto v = arithmetic_equiv(field("x^2 - 2"), field("x^2 - 3"), 100);
  r.check("equiv x^2 - 2, x^2 - 3",
          v.kind == ArithEquivVerdict::Kind::NotEquivalent && v.witness == 7,
          std::string(to_string(v.kind)) + (v.witness ? " witness " + std::to_string(*v.witness) : ""));
  const auto& c = corpus();
  const auto w = arithmetic_equiv(c[19].field(), c[20].field(), 200);
  r.check("equiv degree-7 pair", w.kind == ArithEquivVerdict::Kind::EquivalentUpToBound,
          std::string(to_string(w.kind)) + ", " + std::to_string(w.compared_count) + " primes compared");

  const auto a = adele_iso_verdict(field("x^2 - 2"), field("x^2 - 2"), 100);
  r.check("adele-iso K, K", a.kind == AdeleIsoVerdict::Kind::IsomorphicCertified, to_string(a.kind));
  const auto b = adele_iso_verdict(field("x^2 - 2"), field("x^2 - 3"), 100);
  r.check("adele-iso x^2 - 2, x^2 - 3",
          b.kind == AdeleIsoVerdict::Kind::NotIsomorphic && b.witness == 7, b.reason);
  const auto s = adele_iso_verdict(field("x^2 - 2"), field("x^2 + 1"), 3);
  r.check("adele-iso signature", s.kind == AdeleIsoVerdict::Kind::NotIsomorphic && !s.witness,
          s.reason);
}

void ring_checks(Report& r) {
  const auto z4 = std::get<ResidueRing>(residue_ring_construct(2, 1, 1, std::nullopt, 2));
  const auto f4 = std::get<ResidueRing>(residue_ring_construct(2, 1, 2, std::nullopt, 1));
  const auto d4 = std::get<ResidueRing>(
      residue_ring_construct(2, 2, 1, ModPoly(parse_poly("x^2 - 2"), 8), 2));
  const bool ok = finite_ring_isomorphic(z4, z4) && finite_ring_isomorphic(f4, f4) &&
                  finite_ring_isomorphic(d4, d4) && !finite_ring_isomorphic(z4, f4) &&
                  !finite_ring_isomorphic(z4, d4) && !finite_ring_isomorphic(f4, d4);
  r.check("rings Z/4, F_4, F_2[t]/t^2", ok, "pairwise distinct, each reflexive");
}

void fv_checks(Report& r) {
  using namespace fv;
  const FiniteFamily fam({"a", "b", "c"}, {FiniteRing::integers_mod(2), FiniteRing::integers_mod(3),
                                          FiniteRing::integers_mod(5)});
  const std::vector<GlobalElement> ones = {{1, 1, 1}};
  struct Case {
    const char* psi;
    const char* theta;
    bool want;
  };
  const Case cases[] = {{"v0 = 1", "w0 = w0", true},
                        {"v0 = 0", "w0 = w0", false},
                        {"not (v0 = 1)", "w0 + w0 = 0", true}};
  for (const auto& c : cases) {
    GeneralizedSentence g{parse_boole_formula(c.psi), {parse_ring_formula(c.theta)}, 1};
    const bool got = gen_product_eval(g, fam, ones);
    r.check(std::string("fv ") + c.psi + " ; " + c.theta, got == c.want, got ? "true" : "false");
  }
  const auto set = theta_set(parse_ring_formula("exists y (y*y = w0)"), fam,
                             std::vector<GlobalElement>{{1, 2, 4}});
  std::string labels;
  for (const auto& l : fam.labels(set)) labels += l;
  r.check("fv squares (1,2,4)", labels == "ac", "{" + labels + "}");
}

}  // namespace

bool run_golden_suite(std::ostream& out) {
  Report r(out);
  identity_checks(r);
  split_checks(r);
  invariant_checks(r);
  equivalence_checks(r);
  ring_checks(r);
  fv_checks(r);
  return r.finish();
}

}  // namespace adelic::cli
