#include "adelic/primes.hpp"

#include "adelic/errors.hpp"

#include <algorithm>
#include <map>

namespace adelic {

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

unsigned p_valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw PreconditionError("p_valuation: zero has infinite valuation");
  mpz_class rest = n;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::pair<mpz_class, unsigned> prime_power_split(const mpz_class& n) {
  if (n < 2) return {0, 0};
  auto factors = factor_integer(n);
  if (factors.size() != 1) return {0, 0};
  return factors.front();
}

namespace {

mpz_class pollard_brent(const mpz_class& n, unsigned long c) {
  if (n % 2 == 0) return 2;
  mpz_class y = 2, x, q = 1, g = 1, ys;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto step = [&](const mpz_class& v) {
    mpz_class t = v * v + c;
    return mpz_class(t % n);
  };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = step(y);
        mpz_class d = x - y;
        q = (q * abs(d)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = step(ys);
      mpz_class d = x - ys;
      d = abs(d);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned long c = 1;; ++c) {
    mpz_class d = pollard_brent(n, c);
    if (d != n && d != 1) {
      split_into(d, out);
      split_into(n / d, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
  if (n == 0) throw PreconditionError("factor_integer: zero has no factorization");
  mpz_class rest = abs(n);
  std::map<mpz_class, unsigned> found;
  for (unsigned long d = 2; d < 10000 && mpz_class(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      rest /= d;
      ++found[mpz_class(d)];
    }
  }
  if (rest > 1) split_into(rest, found);
  return {found.begin(), found.end()};
}

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  for (auto& [p, k] : factor_integer(n)) out.push_back(p);
  return out;
}

}  // namespace adelic
