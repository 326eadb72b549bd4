#pragma once

#include "adelic/poly.hpp"

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <vector>

namespace adelic {

/// One edge of a lower convex hull. The slope is reported with the sign
/// convention h/e = -(rise/run), so x^2 - 2 at p = 2 has slope 1/2; h/e is
/// in lowest terms with e > 0.
struct NewtonSegment {
  long start;          ///< abscissa of the left endpoint
  long start_height;   ///< ordinate of the left endpoint
  long length;         ///< horizontal length
  long slope_num;      ///< h
  long slope_den;      ///< e
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower convex hull of the points (i, v_i). A nullopt ordinate marks a
/// coefficient known only to have valuation >= precision. Segments come out
/// left to right with strictly decreasing slope h/e.
///
/// Throws InsufficientPrecision when an unknown point could lie below the
/// hull, or when an endpoint is unknown.
std::vector<NewtonSegment> lower_hull(const std::vector<std::optional<long>>& valuations,
                                      long precision);

/// Newton polygon of a polynomial whose coefficients are known modulo p^m
/// (the modulus of f_local must be exactly a power of p).
std::vector<NewtonSegment> newton_polygon(const ModPoly& f_local, const mpz_class& p);

}  // namespace adelic
