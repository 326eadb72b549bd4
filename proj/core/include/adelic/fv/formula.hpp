#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace adelic::fv {

/// Variable occurrence. Free variables carry their index k from the name
/// w<k> (ring side) or v<k> (Boolean side); bound variables carry the de
/// Bruijn depth of their binder (0 = innermost).
struct Variable {
  std::string name;
  bool bound = false;
  std::size_t index = 0;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Term over the ring signature {+, -, *, 0, 1}.
struct RingTerm {
  enum class Kind { Var, Zero, One, Add, Sub, Mul, Neg };
  Kind kind = Kind::Zero;
  Variable var;
  std::vector<RingTerm> args;
  friend bool operator==(const RingTerm&, const RingTerm&) = default;
};

/// Term over the Boolean-algebra signature: meet '&', join '|', complement '~'.
struct BooleTerm {
  enum class Kind { Var, Zero, One, Meet, Join, Complement };
  Kind kind = Kind::Zero;
  Variable var;
  std::vector<BooleTerm> args;
  friend bool operator==(const BooleTerm&, const BooleTerm&) = default;
};

struct RingAtom {
  RingTerm lhs;
  RingTerm rhs;
  friend bool operator==(const RingAtom&, const RingAtom&) = default;
};

struct BooleAtom {
  enum class Kind { Equal, Subset, Fin };
  Kind kind = Kind::Equal;
  BooleTerm lhs;
  BooleTerm rhs;  ///< unused for Fin
  friend bool operator==(const BooleAtom&, const BooleAtom&) = default;
};

enum class Connective { Atom, Not, And, Or, Implies, Exists, Forall };

/// First-order formula over an atom type. Quantifiers bind `bound_name`
/// over their single subformula.
template <class AtomT>
struct Formula {
  Connective kind = Connective::Atom;
  AtomT atom;
  std::string bound_name;
  std::vector<Formula> sub;
  friend bool operator==(const Formula&, const Formula&) = default;
};

using RingFormula = Formula<RingAtom>;
using BooleFormula = Formula<BooleAtom>;

/// max free index + 1 (0 for sentences).
std::size_t arity(const RingFormula& f);
std::size_t arity(const BooleFormula& f);

/// Deepest nesting of quantifiers.
std::size_t quantifier_depth(const RingFormula& f);
std::size_t quantifier_depth(const BooleFormula& f);

/// Fully parenthesized rendering that parses back to the same tree.
std::string to_string(const RingTerm& t);
std::string to_string(const BooleTerm& t);
std::string to_string(const RingFormula& f);
std::string to_string(const BooleFormula& f);

}  // namespace adelic::fv
