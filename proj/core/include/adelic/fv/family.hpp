#pragma once

#include "adelic/fv/finite_ring.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace adelic::fv {

/// Maximum size of an index set; Pow(I) is enumerated exhaustively.
inline constexpr std::size_t kMaxIndexSize = 16;

/// Subset of a finite index set as a bitmask (bit i = i-th index label).
struct IndexSet {
  std::uint32_t bits = 0;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

/// A family (M_i) of finite rings indexed by a finite set I.
class FiniteFamily {
 public:
  FiniteFamily(std::vector<std::string> index, std::vector<FiniteRing> stalks);

  /// {"index": [...], "stalks": {"a": {"kind": "Zmod", "m": 4}, ...}}.
  /// Stalk kinds: Zmod{m}, GF{p, f}, Residue{p, e, f, s, local_factor?},
  /// Tables{size, add, mul, zero, one}; any stalk may add "relabel": [...].
  static FiniteFamily from_json(std::string_view text);

  std::size_t size() const noexcept { return index_.size(); }
  const std::vector<std::string>& index() const noexcept { return index_; }
  const FiniteRing& stalk(std::size_t i) const { return stalks_.at(i); }
  IndexSet full() const noexcept;
  /// Labels of the members of s, in index order.
  std::vector<std::string> labels(IndexSet s) const;
  IndexSet subset(const std::vector<std::string>& labels) const;

 private:
  std::vector<std::string> index_;
  std::vector<FiniteRing> stalks_;
};

/// An element of the product: one stalk element per index.
using GlobalElement = std::vector<FiniteRing::Element>;

}  // namespace adelic::fv
