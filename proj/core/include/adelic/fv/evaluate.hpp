#pragma once

#include "adelic/fv/family.hpp"
#include "adelic/fv/finite_ring.hpp"
#include "adelic/fv/formula.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace adelic::fv {

/// Maximum quantifier nesting accepted by eval_ring_formula.
inline constexpr std::size_t kMaxQuantifierDepth = 4;

/// M |= theta(assignment). Throws PreconditionError for an unbound free
/// variable or an element outside the ring, CapExceeded past the depth or
/// order caps.
bool eval_ring_formula(const RingFormula& theta, const FiniteRing& stalk,
                       std::span<const FiniteRing::Element> assignment);

/// [[theta(f_0, ..., f_{k-1})]] = { i : M_i |= theta(f_0(i), ..., f_{k-1}(i)) }.
IndexSet theta_set(const RingFormula& theta, const FiniteFamily& family,
                   std::span<const GlobalElement> args);

/// Pow(I) |= psi(assignment) with |I| = index_size. Fin holds of every
/// subset of a finite index set.
bool eval_boole(const BooleFormula& psi, std::size_t index_size,
                std::span<const IndexSet> assignment);

/// The relation psi(theta_0, ..., theta_{n-1}) on k-tuples of the product.
struct GeneralizedSentence {
  BooleFormula psi;
  std::vector<RingFormula> thetas;
  std::size_t k = 0;  ///< number of product arguments

  /// Empty when well formed, otherwise a description of the mismatch:
  /// arity(psi) <= thetas.size() and arity(theta_j) <= k for all j.
  std::string arity_error() const;
};

/// Evaluates psi on the sets [[theta_j(args)]]. Arity problems throw
/// PreconditionError before any evaluation.
bool gen_product_eval(const GeneralizedSentence& g, const FiniteFamily& family,
                      std::span<const GlobalElement> args);

/// One generalized sentence together with arguments in the first family.
struct PreservationCase {
  GeneralizedSentence sentence;
  std::vector<GlobalElement> args;
};

struct PreservationDisagreement {
  std::size_t case_index;
  bool first;
  bool second;
};

struct PreservationReport {
  bool precondition_met = false;
  std::string precondition_failure;  ///< which stalks fail to be isomorphic
  std::size_t checked = 0;
  std::vector<PreservationDisagreement> disagreements;

  bool all_agree() const { return precondition_met && disagreements.empty(); }
};

/// Evaluates every case on both families, transporting arguments along
/// stalk-wise isomorphisms found by search (stalk order <= 64). A failed
/// precondition is reported, not thrown.
PreservationReport preservation_check(const FiniteFamily& first, const FiniteFamily& second,
                                      std::span<const PreservationCase> cases);

}  // namespace adelic::fv
