#include "adelic/fv/formula.hpp"

#include <algorithm>

namespace adelic::fv {

namespace {

template <class Term>
std::size_t term_arity(const Term& t) {
  std::size_t a = 0;
  if (t.kind == Term::Kind::Var && !t.var.bound) a = t.var.index + 1;
  for (const auto& s : t.args) a = std::max(a, term_arity(s));
  return a;
}

std::size_t atom_arity(const RingAtom& a) {
  return std::max(term_arity(a.lhs), term_arity(a.rhs));
}

std::size_t atom_arity(const BooleAtom& a) {
  if (a.kind == BooleAtom::Kind::Fin) return term_arity(a.lhs);
  return std::max(term_arity(a.lhs), term_arity(a.rhs));
}

template <class AtomT>
std::size_t formula_arity(const Formula<AtomT>& f) {
  if (f.kind == Connective::Atom) return atom_arity(f.atom);
  std::size_t a = 0;
  for (const auto& s : f.sub) a = std::max(a, formula_arity(s));
  return a;
}

template <class AtomT>
std::size_t depth(const Formula<AtomT>& f) {
  std::size_t d = 0;
  for (const auto& s : f.sub) d = std::max(d, depth(s));
  if (f.kind == Connective::Exists || f.kind == Connective::Forall) ++d;
  return d;
}

std::string atom_string(const RingAtom& a) { return to_string(a.lhs) + " = " + to_string(a.rhs); }

std::string atom_string(const BooleAtom& a) {
  switch (a.kind) {
    case BooleAtom::Kind::Equal:
      return to_string(a.lhs) + " = " + to_string(a.rhs);
    case BooleAtom::Kind::Subset:
      return to_string(a.lhs) + " sub " + to_string(a.rhs);
    case BooleAtom::Kind::Fin:
      return "Fin(" + to_string(a.lhs) + ")";
  }
  return {};
}

template <class AtomT>
std::string formula_string(const Formula<AtomT>& f) {
  switch (f.kind) {
    case Connective::Atom:
      return atom_string(f.atom);
    case Connective::Not:
      return "not (" + formula_string(f.sub[0]) + ")";
    case Connective::And:
      return "(" + formula_string(f.sub[0]) + ") and (" + formula_string(f.sub[1]) + ")";
    case Connective::Or:
      return "(" + formula_string(f.sub[0]) + ") or (" + formula_string(f.sub[1]) + ")";
    case Connective::Implies:
      return "(" + formula_string(f.sub[0]) + ") -> (" + formula_string(f.sub[1]) + ")";
    case Connective::Exists:
      return "exists " + f.bound_name + " (" + formula_string(f.sub[0]) + ")";
    case Connective::Forall:
      return "forall " + f.bound_name + " (" + formula_string(f.sub[0]) + ")";
  }
  return {};
}

}  // namespace

std::size_t arity(const RingFormula& f) { return formula_arity(f); }
std::size_t arity(const BooleFormula& f) { return formula_arity(f); }

std::size_t quantifier_depth(const RingFormula& f) { return depth(f); }
std::size_t quantifier_depth(const BooleFormula& f) { return depth(f); }

std::string to_string(const RingTerm& t) {
  using K = RingTerm::Kind;
  switch (t.kind) {
    case K::Var:
      return t.var.name;
    case K::Zero:
      return "0";
    case K::One:
      return "1";
    case K::Add:
      return "(" + to_string(t.args[0]) + " + " + to_string(t.args[1]) + ")";
    case K::Sub:
      return "(" + to_string(t.args[0]) + " - " + to_string(t.args[1]) + ")";
    case K::Mul:
      return "(" + to_string(t.args[0]) + " * " + to_string(t.args[1]) + ")";
    case K::Neg:
      return "(-" + to_string(t.args[0]) + ")";
  }
  return {};
}

std::string to_string(const BooleTerm& t) {
  using K = BooleTerm::Kind;
  switch (t.kind) {
    case K::Var:
      return t.var.name;
    case K::Zero:
      return "0";
    case K::One:
      return "1";
    case K::Meet:
      return "(" + to_string(t.args[0]) + " & " + to_string(t.args[1]) + ")";
    case K::Join:
      return "(" + to_string(t.args[0]) + " | " + to_string(t.args[1]) + ")";
    case K::Complement:
      return "(~" + to_string(t.args[0]) + ")";
  }
  return {};
}

std::string to_string(const RingFormula& f) { return formula_string(f); }
std::string to_string(const BooleFormula& f) { return formula_string(f); }

}  // namespace adelic::fv
