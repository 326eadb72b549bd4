#include "adelic/invariants.hpp"

#include "adelic/errors.hpp"
#include "adelic/primes.hpp"
#include "adelic/real_roots.hpp"

#include <algorithm>
#include <set>

namespace adelic {

SplittingSpectrum spectrum(const NumberField& field, std::int64_t bound, long precision) {
  if (bound < 2) throw PreconditionError("spectrum: bound must be at least 2");
  SplittingSpectrum s{field, bound, {}, {}};
  for (std::int64_t p : primes_up_to(bound)) {
    const PrimeDecomposition d = decompose(field, mpz_class(static_cast<long>(p)), precision);
    if (d.resolved()) {
      s.entries[splitting_type(d)].push_back(p);
    } else {
      s.excluded.push_back(p);
    }
  }
  return s;
}

Signature signature(const NumberField& field) {
  const int r1 = sturm_real_roots(field.min_poly());
  return {r1, (field.degree() - r1) / 2};
}

namespace {

bool completely_split(const PrimeDecomposition& d, int degree) {
  if (!d.resolved() || static_cast<int>(d.factors.size()) != degree) return false;
  return std::all_of(d.factors.begin(), d.factors.end(),
                     [](const PrimeFactor& pf) { return pf.e == 1 && pf.f == 1; });
}

}  // namespace

std::optional<DegreeDetection> degree_via_split_prime(const NumberField& field,
                                                      std::int64_t bound) {
  if (bound < 2) throw PreconditionError("degree_via_split_prime: bound must be at least 2");
  for (std::int64_t p : primes_up_to(bound)) {
    const mpz_class mp(static_cast<long>(p));
    if (!good_prime_test(field, mp)) continue;
    const PrimeDecomposition d = decompose(field, mp);
    if (completely_split(d, field.degree())) {
      return DegreeDetection{static_cast<int>(d.factors.size()), p};
    }
  }
  return std::nullopt;
}

std::vector<std::int64_t> aq_distinguisher(const NumberField& field, std::int64_t bound) {
  if (bound < 2) throw PreconditionError("aq_distinguisher: bound must be at least 2");
  std::vector<std::int64_t> out;
  for (std::int64_t p : primes_up_to(bound)) {
    const mpz_class mp(static_cast<long>(p));
    if (!good_prime_test(field, mp)) continue;
    const PrimeDecomposition d = decompose(field, mp);
    if (d.resolved() && d.factors == std::vector<PrimeFactor>{{1, 1}}) out.push_back(p);
  }
  return out;
}

std::vector<std::uint64_t> ZetaLocalFactor::ideal_counts(int max_power) const {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(std::max(max_power, 0)) + 1, 0);
  c[0] = 1;
  for (int f : residue_degrees.residue_degrees) {
    for (int k = f; k <= max_power; ++k) c[k] += c[k - f];
  }
  return c;
}

ZetaLocalFactor zeta_local_factor(const NumberField& field, const mpz_class& p) {
  return {p, splitting_type(decompose(field, p))};
}

namespace {

// a_n = prod over p^k || n of the local ideal counts; zero when some prime
// factor of n is not in `allowed`.
std::vector<std::uint64_t> multiplicative_coefficients(const NumberField& field, std::int64_t n,
                                                       const std::set<std::int64_t>& allowed) {
  if (n < 1) return {};
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n), 0);
  a[0] = 1;
  // multiply the series by one local factor at a time
  for (std::int64_t p : primes_up_to(n)) {
    if (!allowed.count(p)) continue;
    int max_power = 0;
    for (std::int64_t q = 1; q <= n / p; q *= p) ++max_power;
    const auto counts =
        zeta_local_factor(field, mpz_class(static_cast<long>(p))).ideal_counts(max_power);
    std::vector<std::uint64_t> next(a);
    for (std::int64_t m = 1; m <= n; ++m) {
      if (a[m - 1] == 0 || m % p == 0) continue;
      std::int64_t q = p;
      for (int k = 1; q <= n / m; ++k) {
        next[m * q - 1] += a[m - 1] * counts[k];
        if (q > n / p) break;
        q *= p;
      }
    }
    a = std::move(next);
  }
  return a;
}

}  // namespace

std::vector<std::uint64_t> zeta_partial_coefficients(const NumberField& field, std::int64_t n) {
  const auto primes = primes_up_to(std::max<std::int64_t>(n, 2));
  return multiplicative_coefficients(field, n, {primes.begin(), primes.end()});
}

std::vector<std::uint64_t> euler_product_coefficients(const NumberField& field, std::int64_t n,
                                                      std::span<const std::int64_t> primes) {
  return multiplicative_coefficients(field, n, {primes.begin(), primes.end()});
}

const char* to_string(ArithEquivVerdict::Kind kind) {
  switch (kind) {
    case ArithEquivVerdict::Kind::NotEquivalent:
      return "NotEquivalent";
    case ArithEquivVerdict::Kind::EquivalentUpToBound:
      return "EquivalentUpToBound";
  }
  return "?";
}

ArithEquivVerdict arithmetic_equiv(const NumberField& k, const NumberField& l,
                                   std::int64_t bound) {
  if (bound < 2) throw PreconditionError("arithmetic_equiv: bound must be at least 2");
  ArithEquivVerdict v;
  v.bound = bound;
  const auto dk = degree_via_split_prime(k, bound);
  const auto dl = degree_via_split_prime(l, bound);
  // with no split prime on either side there is nothing to contradict
  v.degree_check = dk && dl ? dk->degree == dl->degree : dk.has_value() == dl.has_value();

  for (std::int64_t p : primes_up_to(bound)) {
    const mpz_class mp(static_cast<long>(p));
    if (!good_prime_test(k, mp) || !good_prime_test(l, mp)) {
      v.excluded_primes.push_back(p);
      continue;
    }
    const PrimeDecomposition a = decompose(k, mp);
    const PrimeDecomposition b = decompose(l, mp);
    if (!a.resolved() || !b.resolved()) {
      v.excluded_primes.push_back(p);
      continue;
    }
    ++v.compared_count;
    SplittingType ta = splitting_type(a);
    SplittingType tb = splitting_type(b);
    if (ta != tb) {
      v.kind = ArithEquivVerdict::Kind::NotEquivalent;
      v.witness = p;
      v.type_k = std::move(ta);
      v.type_l = std::move(tb);
      return v;
    }
  }
  v.kind = ArithEquivVerdict::Kind::EquivalentUpToBound;
  return v;
}

int keating_bound(const mpz_class& p, int e) {
  if (e < 1) throw PreconditionError("keating_bound: e must be positive");
  if (!is_prime(p)) throw PreconditionError("keating_bound: p must be prime");
  mpq_class x(p, p - 1);
  x.canonicalize();
  x += mpq_class(static_cast<long>(p_valuation(mpz_class(e), p)) * e);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return static_cast<int>(fl.get_si()) + 1;
}

}  // namespace adelic
