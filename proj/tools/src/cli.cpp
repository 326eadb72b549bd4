#include <adelic_cli/cli.hpp>
#include <adelic_cli/corpus.hpp>

#include <adelic/adele_iso.hpp>
#include <adelic/errors.hpp>
#include <adelic/fv/evaluate.hpp>
#include <adelic/fv/parser.hpp>
#include <adelic/invariants.hpp>
#include <adelic/primes.hpp>
#include <adelic/splitting.hpp>
#include <adelic/verdict_json.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace adelic::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::int64_t bound = 1000;
  long precision = 0;
  std::string prime;
  std::vector<std::string> fields;
  std::uint64_t ring_cap = kDefaultRingOrderCap;
  std::string family;
  std::string psi;
  std::vector<std::string> thetas;
  std::vector<std::string> args;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A field argument is a file path, or "poly:<polynomial>" inline.
NumberField load_field(const std::string& arg) {
  if (arg.rfind("poly:", 0) == 0) return NumberField(parse_poly(arg.substr(5)));
  return NumberField::from_text(read_file(arg));
}

std::string join(const std::vector<std::int64_t>& v) {
  if (v.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string sig_string(const Signature& s) {
  return "(" + std::to_string(s.real_count) + "," + std::to_string(s.complex_count) + ")";
}

int cmd_split(const Options& o, std::ostream& out) {
  const NumberField k = load_field(o.fields.at(0));
  mpz_class p;
  if (p.set_str(o.prime, 10) != 0 || !is_prime(p)) {
    throw PreconditionError("--prime must be a prime, got '" + o.prime + "'");
  }
  const PrimeDecomposition d = decompose(k, p, o.precision);
  if (o.format == "json") {
    json j = d;
    j["field"] = k.min_poly().to_string();
    j["degree"] = k.degree();
    out << j.dump(2) << '\n';
  } else if (d.resolved()) {
    out << d.factors_string() << " via " << to_string(d.method) << '\n';
    out << "sum e_i f_i = " << d.degree_sum() << " = [K:Q] = " << k.degree() << '\n';
  } else {
    out << "Undetermined at " << p.get_str() << ": " << d.reason << '\n';
  }
  return d.resolved() ? kOk : kUndetermined;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const NumberField k = load_field(o.fields.at(0));
  const SplittingSpectrum s = spectrum(k, o.bound, o.precision);
  if (o.format == "json") {
    out << json(s).dump(2) << '\n';
    return kOk;
  }
  out << "spectrum of " << k.display_name() << " up to " << s.bound << '\n';
  for (const auto& [type, primes] : s.entries) out << type.to_string() << ": " << join(primes) << '\n';
  out << "excluded: " << join(s.excluded) << '\n';
  return kOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const NumberField k = load_field(o.fields.at(0));
  const Signature sig = signature(k);
  const auto det = degree_via_split_prime(k, o.bound);
  const auto dist = aq_distinguisher(k, o.bound);
  if (o.format == "json") {
    json j = {{"field", k.min_poly().to_string()},
              {"label", k.label()},
              {"degree", k.degree()},
              {"signature", sig},
              {"bound", o.bound},
              {"degree_detection", det ? json{{"degree", det->degree}, {"witness", det->witness}}
                                       : json(nullptr)},
              {"distinguisher", dist}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "field: " << k.display_name() << '\n';
  out << "degree: " << k.degree() << '\n';
  out << "polynomial discriminant: " << k.poly_disc().get_str() << '\n';
  out << "signature: " << sig_string(sig) << '\n';
  if (det) {
    out << "degree via split prime: " << det->degree << " (witness " << det->witness << ")\n";
  } else {
    out << "degree via split prime: no completely split prime up to " << o.bound << '\n';
  }
  out << "primes with a single degree-one place: " << dist.size();
  if (!dist.empty()) out << " (first " << dist.front() << ", last " << dist.back() << ")";
  out << '\n';
  return kOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const NumberField k = load_field(o.fields.at(0));
  const NumberField l = load_field(o.fields.at(1));
  const ArithEquivVerdict v = arithmetic_equiv(k, l, o.bound);
  if (o.format == "json") {
    out << json(v).dump(2) << '\n';
    return kOk;
  }
  out << to_string(v.kind) << " (bound " << v.bound << ")\n";
  if (v.witness) {
    out << "witness: " << *v.witness << ", " << v.type_k.to_string() << " vs "
        << v.type_l.to_string() << '\n';
  }
  out << "compared primes: " << v.compared_count << '\n';
  out << "excluded primes: " << join(v.excluded_primes) << '\n';
  out << "degree check: " << (v.degree_check ? "agree" : "disagree") << '\n';
  return kOk;
}

int cmd_adele_iso(const Options& o, std::ostream& out) {
  const NumberField k = load_field(o.fields.at(0));
  const NumberField l = load_field(o.fields.at(1));
  const AdeleIsoVerdict v = adele_iso_verdict(k, l, o.bound, o.precision, o.ring_cap);
  if (o.format == "json") {
    out << json(v).dump(2) << '\n';
  } else {
    out << to_string(v.kind) << " (bound " << v.bound << ")\n";
    out << "reason: " << v.reason << '\n';
    if (v.witness) out << "witness: " << *v.witness << '\n';
    auto print = [&](const char* head, const std::vector<LocalMatch>& ms) {
      for (const auto& m : ms) {
        out << head << " p=" << m.k.prime.get_str() << " (e,f)=(" << m.k.e << "," << m.k.f
            << ") <-> (" << m.l.e << "," << m.l.f << ") at O/pi^" << m.truncation << '\n';
      }
    };
    print("certified", v.matching);
    print("matched on (e,f) only", v.unmatched);
    if (!v.assumption_note.empty()) out << "assumption: " << v.assumption_note << '\n';
  }
  return v.kind == AdeleIsoVerdict::Kind::Undetermined ? kUndetermined : kOk;
}

fv::GlobalElement parse_global(const std::string& text) {
  fv::GlobalElement g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      g.push_back(static_cast<fv::FiniteRing::Element>(v));
    } catch (const std::exception&) {
      throw ParseError("bad global element component '" + item + "' in --arg " + text, 0, 0);
    }
  }
  return g;
}

int cmd_fv_eval(const Options& o, std::ostream& out) {
  const fv::FiniteFamily family = fv::FiniteFamily::from_json(read_file(o.family));
  fv::GeneralizedSentence g;
  g.psi = fv::parse_boole_formula(o.psi);
  for (const auto& t : o.thetas) g.thetas.push_back(fv::parse_ring_formula(t));
  std::vector<fv::GlobalElement> args;
  for (const auto& a : o.args) args.push_back(parse_global(a));
  g.k = args.size();
  const bool value = fv::gen_product_eval(g, family, args);
  std::vector<std::vector<std::string>> sets;
  for (const auto& theta : g.thetas) sets.push_back(family.labels(fv::theta_set(theta, family, args)));
  if (o.format == "json") {
    json j = {{"value", value}, {"theta_sets", sets}, {"psi", fv::to_string(g.psi)}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  for (std::size_t j = 0; j < sets.size(); ++j) {
    out << "[[theta" << j << "]] = {";
    for (std::size_t i = 0; i < sets[j].size(); ++i) out << (i ? ", " : "") << sets[j][i];
    out << "}\n";
  }
  out << (value ? "true" : "false") << '\n';
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adelic invariants of number fields"};
  app.name("adelic");
  Options o;
  bool corpus_flag = false;
  app.add_flag("--corpus", corpus_flag, "Run the built-in golden suite");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* split = app.add_subcommand("split", "Decompose a prime in a field");
  split->add_option("field", o.fields, "Field file or poly:<polynomial>")->required()->expected(1);
  split->add_option("--prime,-p", o.prime, "Rational prime")->required();
  split->add_option("--precision", o.precision, "p-adic precision, 0 for automatic")
      ->check(CLI::NonNegativeNumber);

  auto* spec = app.add_subcommand("spectrum", "Group primes up to a bound by splitting type");
  spec->add_option("field", o.fields, "Field file or poly:<polynomial>")->required()->expected(1);
  spec->add_option("--bound,-B", o.bound, "Prime bound")->check(CLI::Range(2, 100000000));
  spec->add_option("--precision", o.precision)->check(CLI::NonNegativeNumber);

  auto* inv = app.add_subcommand("invariants", "Degree, signature and split-prime detection");
  inv->add_option("field", o.fields, "Field file or poly:<polynomial>")->required()->expected(1);
  inv->add_option("--bound,-B", o.bound, "Prime bound")->check(CLI::Range(2, 100000000));

  auto* eq = app.add_subcommand("equiv", "Bounded arithmetic equivalence");
  eq->add_option("fields", o.fields, "Two field files")->required()->expected(2);
  eq->add_option("--bound,-B", o.bound, "Prime bound")->check(CLI::Range(2, 100000000));

  auto* iso = app.add_subcommand("adele-iso", "Adele ring isomorphism verdict");
  iso->add_option("fields", o.fields, "Two field files")->required()->expected(2);
  iso->add_option("--bound,-B", o.bound, "Prime bound")->check(CLI::Range(2, 100000000));
  iso->add_option("--precision", o.precision)->check(CLI::NonNegativeNumber);
  iso->add_option("--ring-cap", o.ring_cap, "Largest residue ring order searched")
      ->check(CLI::PositiveNumber);

  auto* fve = app.add_subcommand("fv-eval", "Evaluate a generalized sentence on a family");
  fve->add_option("--family", o.family, "Family JSON file")->required();
  fve->add_option("--psi", o.psi, "Boolean formula")->required();
  fve->add_option("--theta", o.thetas, "Ring formula, repeatable");
  fve->add_option("--arg", o.args, "Global element as comma-separated stalk values, repeatable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (corpus_flag) return run_golden_suite(out) ? kOk : kGoldenFailure;
    if (split->parsed()) return cmd_split(o, out);
    if (spec->parsed()) return cmd_spectrum(o, out);
    if (inv->parsed()) return cmd_invariants(o, out);
    if (eq->parsed()) return cmd_equiv(o, out);
    if (iso->parsed()) return cmd_adele_iso(o, out);
    if (fve->parsed()) return cmd_fv_eval(o, out);
    err << app.help();
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const UnresolvedPrime& e) {
    err << "undetermined: " << e.what() << '\n';
    return kUndetermined;
  } catch (const InsufficientPrecision& e) {
    err << "undetermined: " << e.what() << '\n';
    return kUndetermined;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace adelic::cli
