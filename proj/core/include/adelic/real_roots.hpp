#pragma once

#include "adelic/poly.hpp"

#include <gmpxx.h>

namespace adelic {

/// Exact resultant of two integer polynomials (Euclidean remainder sequence
/// over Q). Throws PreconditionError if either input is zero.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

/// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f). Requires deg f >= 1.
mpz_class discriminant(const IntPoly& f);

/// True when f and f' share a nonconstant factor over Q.
bool has_repeated_factor(const IntPoly& f);

/// Number of distinct real roots, from sign variations of the Sturm
/// sequence at -infinity and +infinity. f must be nonzero and squarefree.
int sturm_real_roots(const IntPoly& f);

}  // namespace adelic
