#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adelic {

/// Dense univariate polynomial over Z. Coefficients are stored constant term
/// first and trailing zeros are always stripped, so structural equality is
/// polynomial equality and the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const;

  /// Coefficient of x^i; zero past the degree.
  const mpz_class& operator[](std::size_t i) const;
  const mpz_class& leading() const;
  std::span<const mpz_class> coefficients() const noexcept { return c_; }

  IntPoly derivative() const;
  mpz_class evaluate(const mpz_class& at) const;
  /// f(x + shift).
  IntPoly taylor_shift(const mpz_class& shift) const;
  /// gcd of the coefficients, nonnegative.
  mpz_class content() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const mpz_class& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
  friend IntPoly operator-(IntPoly a);

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  /// Human-readable form in the polynomial text grammar, e.g. "x^2 - 2".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> c_;
};

/// Quotient and remainder of a by b. b must be monic.
std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b);

/// Parses the polynomial text grammar: variable x, integer literals and the
/// operators + - * ^ with parentheses. Throws ParseError.
IntPoly parse_poly(std::string_view text);

/// Polynomial over Z/mZ with coefficients reduced into [0, m). The modulus is
/// usually a prime p or a prime power p^k.
class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(mpz_class modulus, std::vector<mpz_class> coefficients);
  ModPoly(const IntPoly& lift, mpz_class modulus);

  static ModPoly constant(const mpz_class& c, const mpz_class& modulus);
  static ModPoly monomial(const mpz_class& c, std::size_t degree, const mpz_class& modulus);
  static ModPoly x(const mpz_class& modulus) { return monomial(1, 1, modulus); }

  const mpz_class& modulus() const noexcept { return m_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const;
  bool is_monic() const;

  const mpz_class& operator[](std::size_t i) const;
  const mpz_class& leading() const;
  std::span<const mpz_class> coefficients() const noexcept { return c_; }

  /// Integer polynomial with coefficients in [0, m).
  IntPoly lift() const;
  ModPoly derivative() const;
  mpz_class evaluate(const mpz_class& at) const;
  /// Same coefficients reduced modulo a divisor of the current modulus.
  ModPoly reduce(const mpz_class& divisor_modulus) const;

  ModPoly& operator+=(const ModPoly& other);
  ModPoly& operator-=(const ModPoly& other);
  ModPoly& operator*=(const ModPoly& other);
  ModPoly& operator*=(const mpz_class& scalar);

  friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
  friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
  friend ModPoly operator*(ModPoly a, const ModPoly& b) { return a *= b; }
  friend ModPoly operator*(ModPoly a, const mpz_class& s) { return a *= s; }
  friend ModPoly operator-(ModPoly a);

  friend bool operator==(const ModPoly& a, const ModPoly& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  void normalize();
  void check_same_modulus(const ModPoly& other) const;
  mpz_class m_{2};
  std::vector<mpz_class> c_;
};

/// Quotient and remainder. Under a composite modulus the divisor must be
/// monic; under a prime modulus any nonzero divisor is accepted.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
ModPoly operator/(const ModPoly& a, const ModPoly& b);

/// Total order on coefficient sequences (degree first), used for canonical
/// sorting of factor lists.
bool canonical_less(const ModPoly& a, const ModPoly& b);

}  // namespace adelic
