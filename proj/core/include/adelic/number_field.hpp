#pragma once

#include "adelic/poly.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adelic {

/// A number field K = Q(alpha) given by the monic minimal polynomial of an
/// algebraic integer alpha.
///
/// Construction checks that the polynomial is monic, of positive degree and
/// squarefree (nonzero discriminant), and rejects polynomials with an integer
/// root when the degree exceeds one. Irreducibility beyond that is the
/// caller's contract; the library does not factor over Z.
class NumberField {
 public:
  explicit NumberField(IntPoly min_poly, std::string label = {});

  /// Parses a field file: one polynomial line plus an optional "label: ..."
  /// line. Blank lines and lines starting with '#' are ignored.
  static NumberField from_text(std::string_view text);

  const IntPoly& min_poly() const noexcept { return min_poly_; }
  int degree() const noexcept { return min_poly_.degree(); }
  const mpz_class& poly_disc() const noexcept { return disc_; }
  const std::string& label() const noexcept { return label_; }
  /// Label if present, otherwise the polynomial.
  std::string display_name() const;
  /// Canonical cache key: the comma-joined coefficient sequence.
  const std::string& key() const noexcept { return key_; }

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.min_poly_ == b.min_poly_;
  }

 private:
  IntPoly min_poly_;
  mpz_class disc_;
  std::string label_;
  std::string key_;
};

}  // namespace adelic
