#pragma once

// Brute-force reference computations used only by the tests. They share no
// code with the library: polynomials mod p are plain vectors of longs and
// everything is found by enumeration.

#include <adelic/poly.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using SmallPoly = std::vector<long>;  // constant term first, no trailing zeros

SmallPoly reduce(const adelic::IntPoly& f, long p);
SmallPoly trim(SmallPoly a);
SmallPoly mul(const SmallPoly& a, const SmallPoly& b, long p);
// remainder of a by a monic b
SmallPoly rem(SmallPoly a, const SmallPoly& b, long p);
bool divides(const SmallPoly& d, const SmallPoly& a, long p);

std::vector<long> roots_mod(const adelic::IntPoly& f, long p);

// Every monic polynomial of degree d over F_p, in counting order.
std::vector<SmallPoly> monic_polys(long p, int d);
bool is_irreducible(const SmallPoly& f, long p);

// Degrees of the irreducible factors of a monic f over F_p with
// multiplicity, by trial division through all monic irreducibles.
std::vector<int> factor_degrees(const SmallPoly& f, long p);

// (multiplicity, degree) pairs sorted by (degree, multiplicity).
std::vector<std::pair<int, int>> factor_pattern(const SmallPoly& f, long p);

// Sorted degrees of the irreducible factors of a monic squarefree f over
// F_p by distinct-degree factorization in machine integers (p < 2^31).
std::vector<int> ddf_degrees(const SmallPoly& f, long p);

// Sorted residue degrees of p in Z[x]/(f) at a prime not dividing disc.
std::vector<int> splitting_type_at_good_prime(const adelic::IntPoly& f, long p);

// Resultant as the determinant of the Sylvester matrix (fraction-free
// elimination).
mpz_class sylvester_resultant(const adelic::IntPoly& a, const adelic::IntPoly& b);

// Characteristic polynomial over Q of the n x n rational matrix m.
std::vector<mpq_class> char_poly(const std::vector<std::vector<mpq_class>>& m);

// Matrix of multiplication by beta = sum b_i alpha^i on Q(alpha), basis
// 1, alpha, ..., alpha^{n-1}.
std::vector<std::vector<mpq_class>> multiplication_matrix(const adelic::IntPoly& f,
                                                          const std::vector<mpq_class>& beta);

// Random monic polynomial over F_p of the given degree.
adelic::ModPoly random_monic(std::mt19937_64& rng, long p, int degree);

// Product of (x - r_i) times product of (x^2 + c_j) with c_j > 0; the number
// of distinct real roots is the number of distinct r_i.
adelic::IntPoly constructed_poly(const std::vector<long>& real_roots,
                                 const std::vector<long>& positive_quadratics);

}  // namespace oracle
