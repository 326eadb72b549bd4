#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace adelic {
class ResidueRing;
}

namespace adelic::fv {

/// Finite commutative ring with elements 0..size()-1 and explicit addition
/// and multiplication tables.
class FiniteRing {
 public:
  using Element = std::uint32_t;

  /// Largest order accepted for table construction.
  static constexpr std::uint32_t kMaxOrder = 1u << 12;

  /// Z/m; element k is the residue k.
  static FiniteRing integers_mod(std::uint32_t m);
  /// F_{p^f} presented as F_p[y]/(irreducible_modp(p, f)).
  static FiniteRing galois_field(std::uint32_t p, int f);
  /// Elements numbered by ResidueRing::element_at.
  static FiniteRing from_residue_ring(const ResidueRing& ring);
  /// Validates closure, identities and commutativity. Tables are row-major.
  static FiniteRing from_tables(std::string name, std::uint32_t size,
                                std::vector<Element> add, std::vector<Element> mul,
                                Element zero, Element one);

  /// Same ring with element x renamed to permutation[x].
  FiniteRing relabeled(std::span<const Element> permutation) const;

  std::uint32_t size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }
  Element add(Element a, Element b) const { return add_[a * n_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

 private:
  FiniteRing(std::string name, std::uint32_t n, std::vector<Element> add,
             std::vector<Element> mul, Element zero, Element one);

  std::string name_;
  std::uint32_t n_ = 0;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  Element zero_ = 0;
  Element one_ = 0;
};

/// A ring isomorphism a -> b as the image of each element, or nullopt.
/// Backtracking over images of a greedy generating set. Throws CapExceeded
/// when either order exceeds `cap`.
std::optional<std::vector<FiniteRing::Element>> find_isomorphism(const FiniteRing& a,
                                                                 const FiniteRing& b,
                                                                 std::uint32_t cap = 64);

}  // namespace adelic::fv
