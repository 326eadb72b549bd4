#pragma once

#include "adelic/poly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace adelic {

/// A computation that could not be carried out, with a machine-readable
/// reason code and a human-readable detail.
struct Undetermined {
  std::string reason;
  std::string detail;
  friend bool operator==(const Undetermined&, const Undetermined&) = default;
};

enum class ResidueShape { Unramified, TotallyRamified, Mixed };

const char* to_string(ResidueShape shape);

/// O / pi^s O for the valuation ring O of a p-adic field with ramification
/// index e and residue degree f, presented as W[pi]/(E(pi), pi^s) where
/// W = Z_p[y]/(phi(y)) is unramified of degree f and E is Eisenstein of
/// degree e over Z (E = x - p when e = 1).
///
/// Elements are e*f coordinate vectors a[i*f + j] standing for
/// sum a[i*f+j] y^j pi^i, with a[i*f+j] reduced modulo p^{ceil((s-i)/e)}.
/// The order is p^{f s} and the characteristic p^{ceil(s/e)}.
class ResidueRing {
 public:
  using Element = std::vector<std::int64_t>;

  ResidueRing(const mpz_class& p, int e, int f, int s, IntPoly unramified_modulus,
              IntPoly eisenstein);

  const mpz_class& p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int f() const noexcept { return f_; }
  int s() const noexcept { return s_; }
  ResidueShape shape() const noexcept;
  const IntPoly& unramified_modulus() const noexcept { return phi_; }
  const IntPoly& eisenstein() const noexcept { return eis_; }

  const mpz_class& order() const noexcept { return order_; }
  const mpz_class& characteristic() const noexcept { return characteristic_; }
  /// Additive order of the coordinate for pi^i y^j.
  std::int64_t coordinate_modulus(int i) const { return coord_mod_[i]; }
  int rank() const noexcept { return e_ * f_; }

  Element zero() const;
  Element one() const;
  /// Class of y (requires f > 1 to be a nontrivial generator).
  Element y() const;
  /// Class of the uniformizer.
  Element pi() const;
  Element from_integer(std::int64_t n) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, std::int64_t n) const;
  Element pow(Element a, unsigned k) const;
  bool is_zero(const Element& a) const;

  /// Mixed-radix enumeration of elements. Requires order() to fit in 64 bits.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& a) const;

  std::string describe() const;

  /// p^{ceil(s/e)}, the modulus of intermediate products.
  std::int64_t work_modulus() const noexcept { return work_mod_; }
  /// Coefficients of phi and E below their leading terms, reduced mod work_modulus().
  const std::vector<std::int64_t>& phi_low() const noexcept { return phi_low_; }
  const std::vector<std::int64_t>& eisenstein_low() const noexcept { return eis_low_; }

 private:
  mpz_class p_;
  int e_;
  int f_;
  int s_;
  IntPoly phi_;
  IntPoly eis_;
  mpz_class order_;
  mpz_class characteristic_;
  std::int64_t work_mod_;  ///< p^{ceil(s/e)}
  std::vector<std::int64_t> coord_mod_;
  std::vector<std::int64_t> phi_low_;  ///< phi coefficients below the leading one, mod work_mod_
  std::vector<std::int64_t> eis_low_;  ///< E coefficients below the leading one, mod work_mod_
};

/// O/pi^s for the local field with data (e, f) at p:
/// - e = 1: (Z/p^s)[y]/(phi), phi = irreducible_modp(p, f), any local factor ignored;
/// - e > 1, f = 1: requires a local factor Eisenstein at p, known modulo at
///   least p^{ceil(s/e)+1}.
/// Anything else is Undetermined, as are moduli beyond 2^62.
std::variant<ResidueRing, Undetermined> residue_ring_construct(
    const mpz_class& p, int e, int f, const std::optional<ModPoly>& local_factor, int s);

/// Default cap on ring order for isomorphism testing.
inline constexpr std::uint64_t kDefaultRingOrderCap = std::uint64_t{1} << 20;

/// Decides whether two residue rings are isomorphic as rings.
///
/// Rejects on order, characteristic, additive type and nilradical size, then
/// searches images of the ring generators (y and pi) in the second ring that
/// satisfy the defining relations and extend to a bijective homomorphism.
/// Throws CapExceeded when an order above `cap` would need enumeration.
bool finite_ring_isomorphic(const ResidueRing& a, const ResidueRing& b,
                            std::uint64_t cap = kDefaultRingOrderCap);

/// Number of nilpotent elements. The ring is local, so this is the size of
/// the maximal ideal, order / p^f.
mpz_class nilradical_size(const ResidueRing& ring);

/// pi-adic valuation of an element, s for zero.
int valuation(const ResidueRing& ring, const ResidueRing::Element& a);

}  // namespace adelic
