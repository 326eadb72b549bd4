#include "adelic/splitting.hpp"

#include "adelic/errors.hpp"
#include "adelic/factor_modp.hpp"
#include "adelic/newton_polygon.hpp"
#include "adelic/primes.hpp"
#include "fq_poly.hpp"
#include "poly_internal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace adelic {

const char* to_string(DecompositionMethod method) {
  switch (method) {
    case DecompositionMethod::Kummer:
      return "Kummer";
    case DecompositionMethod::NewtonPolygon:
      return "NewtonPolygon";
  }
  return "?";
}

int PrimeDecomposition::degree_sum() const {
  int s = 0;
  for (const auto& pf : factors) s += pf.e * pf.f;
  return s;
}

std::string PrimeDecomposition::factors_string() const {
  std::ostringstream out;
  for (const auto& pf : factors) out << '(' << pf.e << ',' << pf.f << ')';
  return out.str();
}

int SplittingType::sum() const {
  int s = 0;
  for (int f : residue_degrees) s += f;
  return s;
}

std::string SplittingType::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < residue_degrees.size(); ++i) {
    if (i) out << ',';
    out << residue_degrees[i];
  }
  out << ')';
  return out.str();
}

bool good_prime_test(const NumberField& field, const mpz_class& p) {
  return field.poly_disc() % p != 0;
}

bool dedekind_index_test(const NumberField& field, const mpz_class& p) {
  if (good_prime_test(field, p)) {
    throw PreconditionError("dedekind_index_test: " + p.get_str() +
                            " does not divide the polynomial discriminant");
  }
  const IntPoly& f = field.min_poly();
  IntPoly g = IntPoly::constant(1);
  IntPoly h = IntPoly::constant(1);
  ModPoly repeated = ModPoly::constant(1, p);
  for (const auto& [phi, mult] : factor_modp(ModPoly(f, p))) {
    IntPoly lift = phi.lift();
    g *= lift;
    for (unsigned k = 1; k < mult; ++k) h *= lift;
    if (mult >= 2) repeated *= phi;
  }
  IntPoly diff = f - g * h;
  std::vector<mpz_class> quotient(diff.coefficients().begin(), diff.coefficients().end());
  for (auto& c : quotient) c /= p;
  ModPoly correction(IntPoly(std::move(quotient)), p);
  // gcd(F, g, h) = gcd(F, product of repeated factors)
  return gcd_modp(correction, repeated).degree() > 0;
}

PrimeDecomposition kummer_decompose(const NumberField& field, const mpz_class& p) {
  if (!is_prime(p)) throw PreconditionError("kummer_decompose: " + p.get_str() + " is not prime");
  if (!good_prime_test(field, p) && dedekind_index_test(field, p)) {
    throw PreconditionError("kummer_decompose: " + p.get_str() +
                            " divides the index of Z[alpha]; Kummer's theorem does not apply");
  }
  PrimeDecomposition d;
  d.prime = p;
  d.status = DecompositionStatus::Resolved;
  d.method = DecompositionMethod::Kummer;
  for (const auto& [phi, mult] : factor_modp(ModPoly(field.min_poly(), p))) {
    d.factors.push_back({static_cast<int>(mult), phi.degree()});
  }
  std::sort(d.factors.begin(), d.factors.end());
  return d;
}

long default_precision(const NumberField& field, const mpz_class& p) {
  return 2 * (1 + static_cast<long>(p_valuation(field.poly_disc(), p))) + 4;
}

namespace {

std::optional<long> min_valuation(const ModPoly& a, const mpz_class& p) {
  if (a.is_zero()) return std::nullopt;
  long best = -1;
  for (const auto& c : a.coefficients()) {
    if (c == 0) continue;
    long v = static_cast<long>(p_valuation(c, p));
    if (best < 0 || v < best) best = v;
  }
  return best;
}

ModPoly divide_by_prime_power(const ModPoly& a, const mpz_class& p, long k) {
  mpz_class pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
  std::vector<mpz_class> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& v : c) v /= pk;
  return ModPoly(p, std::move(c));
}

}  // namespace

std::vector<OreBranch> ore_branches(const NumberField& field, const mpz_class& p,
                                    long precision) {
  if (precision < 1) throw PreconditionError("ore_branches: precision must be positive");
  if (!is_prime(p)) throw PreconditionError("ore_branches: " + p.get_str() + " is not prime");
  mpz_class pm;
  mpz_pow_ui(pm.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(precision));
  const ModPoly f_local(field.min_poly(), pm);

  std::vector<OreBranch> branches;
  for (const auto& [phi_bar, mult] : factor_modp(ModPoly(field.min_poly(), p))) {
    OreBranch branch;
    branch.phi = phi_bar.lift();
    branch.multiplicity = mult;
    if (mult == 1) {
      branches.push_back(std::move(branch));
      continue;
    }

    // phi-adic expansion f = sum a_i phi^i, kept up to i = multiplicity.
    const ModPoly phi_local(branch.phi, pm);
    std::vector<ModPoly> expansion;
    std::vector<std::optional<long>> vals;
    ModPoly rest = f_local;
    for (unsigned i = 0; i <= mult; ++i) {
      auto [q, r] = divmod(rest, phi_local);
      vals.push_back(min_valuation(r, p));
      expansion.push_back(std::move(r));
      rest = std::move(q);
    }
    branch.segments = lower_hull(vals, precision);

    detail::FiniteFieldExt residue_field(phi_bar);
    for (const auto& seg : branch.segments) {
      const long degree = seg.length / seg.slope_den;
      detail::FqPoly residual;
      for (long j = 0; j <= degree; ++j) {
        const long i = seg.start + j * seg.slope_den;
        const long height = seg.start_height - j * seg.slope_num;
        if (vals[i] && *vals[i] == height) {
          residual.c.push_back(
              residue_field.reduce(divide_by_prime_power(expansion[i], p, height)));
        } else {
          residual.c.push_back(residue_field.zero());
        }
      }
      residual = detail::fq_normalize(std::move(residual));
      if (detail::fq_is_squarefree(residue_field, residual)) {
        branch.residual_degrees.push_back(detail::fq_factor_degrees(residue_field, residual));
      } else {
        branch.residual_degrees.emplace_back();
        branch.regular = false;
      }
    }
    branches.push_back(std::move(branch));
  }
  return branches;
}

PrimeDecomposition ore_local_decompose(const NumberField& field, const mpz_class& p,
                                       long precision) {
  PrimeDecomposition d;
  d.prime = p;
  d.method = DecompositionMethod::NewtonPolygon;
  for (const auto& branch : ore_branches(field, p, precision)) {
    if (!branch.regular) {
      d.status = DecompositionStatus::Undetermined;
      d.factors.clear();
      d.reason = "non-regular: residual polynomial for phi = " + branch.phi.to_string() +
                 " is inseparable";
      return d;
    }
    const int phi_degree = branch.phi.degree();
    if (branch.multiplicity == 1) {
      d.factors.push_back({1, phi_degree});
      continue;
    }
    for (std::size_t k = 0; k < branch.segments.size(); ++k) {
      const int e = static_cast<int>(branch.segments[k].slope_den);
      for (int r : branch.residual_degrees[k]) d.factors.push_back({e, r * phi_degree});
    }
  }
  std::sort(d.factors.begin(), d.factors.end());
  d.status = DecompositionStatus::Resolved;
  return d;
}

namespace {

class DecompositionCache {
 public:
  using Key = std::tuple<std::string, std::string, long>;

  std::optional<PrimeDecomposition> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, const PrimeDecomposition& d) {
    std::unique_lock lock(mutex_);
    entries_.emplace(key, d);
  }

  void clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, PrimeDecomposition> entries_;
};

DecompositionCache& cache() {
  static DecompositionCache instance;
  return instance;
}

PrimeDecomposition decompose_uncached(const NumberField& field, const mpz_class& p,
                                      long precision) {
  if (good_prime_test(field, p)) return kummer_decompose(field, p);
  long prec = precision > 0 ? precision : default_precision(field, p);
  PrimeDecomposition d;
  d.prime = p;
  d.method = DecompositionMethod::NewtonPolygon;
  d.status = DecompositionStatus::Undetermined;
  for (int attempt = 0; attempt <= 4; ++attempt, prec *= 2) {
    try {
      d = ore_local_decompose(field, p, prec);
      break;
    } catch (const InsufficientPrecision& e) {
      d.reason = std::string("insufficient precision: ") + e.what();
    }
  }
  if (d.resolved()) return d;
  // Ore analysis inconclusive; Kummer still applies when p does not divide the index
  if (!dedekind_index_test(field, p)) return kummer_decompose(field, p);
  return d;
}

}  // namespace

PrimeDecomposition decompose(const NumberField& field, const mpz_class& p, long precision) {
  if (!is_prime(p)) throw PreconditionError("decompose: " + p.get_str() + " is not prime");
  DecompositionCache::Key key{field.key(), p.get_str(), precision};
  if (auto hit = cache().find(key)) return *hit;
  PrimeDecomposition d = decompose_uncached(field, p, precision);
  if (d.resolved() && d.degree_sum() != field.degree()) {
    d.status = DecompositionStatus::Undetermined;
    d.reason = "inconsistent local data: sum of e*f is " + std::to_string(d.degree_sum());
    d.factors.clear();
  }
  cache().insert(key, d);
  return d;
}

SplittingType splitting_type(const PrimeDecomposition& decomposition) {
  if (!decomposition.resolved()) {
    throw UnresolvedPrime("splitting type requested for undetermined prime " +
                          decomposition.prime.get_str() + ": " + decomposition.reason);
  }
  SplittingType t;
  for (const auto& pf : decomposition.factors) t.residue_degrees.push_back(pf.f);
  std::sort(t.residue_degrees.begin(), t.residue_degrees.end());
  return t;
}

void clear_decomposition_cache() { cache().clear(); }

}  // namespace adelic
