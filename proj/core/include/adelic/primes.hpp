#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace adelic {

/// All primes p with 2 <= p <= bound, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

bool is_prime(const mpz_class& n);

/// Largest k with p^k | n. n must be nonzero.
unsigned p_valuation(const mpz_class& n, const mpz_class& p);

/// If n = p^k for a prime p and k >= 1, returns (p, k); otherwise (0, 0).
std::pair<mpz_class, unsigned> prime_power_split(const mpz_class& n);

/// Prime factorization of |n| as (prime, exponent) pairs, primes ascending.
/// Trial division followed by Brent's variant of Pollard rho.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

/// Distinct primes dividing n, ascending. n must be nonzero.
std::vector<mpz_class> prime_divisors(const mpz_class& n);

}  // namespace adelic
