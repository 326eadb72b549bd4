#pragma once

// Random formulas and small ring families shared by the fv unit tests and
// the acceptance suite.

#include <adelic/fv/family.hpp>
#include <adelic/fv/formula.hpp>
#include <adelic/poly.hpp>
#include <adelic/residue_ring.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testgen {

using namespace adelic::fv;

// Random syntax trees. Bound variables get the name of their binder, which
// is unique along each branch, so printing and re-parsing is unambiguous.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  RingTerm ring_term(int depth, const std::vector<std::string>& binders, std::size_t free_vars) {
    const int pick = static_cast<int>(rng_() % (depth <= 0 ? 3 : 7));
    RingTerm t;
    switch (pick) {
      case 0:
        if (!binders.empty() && rng_() % 2) {
          const std::size_t j = rng_() % binders.size();
          t.kind = RingTerm::Kind::Var;
          t.var = {binders[binders.size() - 1 - j], true, j};
        } else {
          const std::size_t k = rng_() % free_vars;
          t.kind = RingTerm::Kind::Var;
          t.var = {"w" + std::to_string(k), false, k};
        }
        return t;
      case 1: t.kind = RingTerm::Kind::Zero; return t;
      case 2: t.kind = RingTerm::Kind::One; return t;
      case 3: t.kind = RingTerm::Kind::Add; break;
      case 4: t.kind = RingTerm::Kind::Sub; break;
      case 5: t.kind = RingTerm::Kind::Mul; break;
      default:
        t.kind = RingTerm::Kind::Neg;
        t.args.push_back(ring_term(depth - 1, binders, free_vars));
        return t;
    }
    t.args.push_back(ring_term(depth - 1, binders, free_vars));
    t.args.push_back(ring_term(depth - 1, binders, free_vars));
    return t;
  }

  RingFormula ring_formula(int depth, std::vector<std::string> binders, std::size_t free_vars,
                           int quantifiers_left) {
    RingFormula f;
    const int pick = static_cast<int>(rng_() % (depth <= 0 ? 1 : 7));
    switch (pick) {
      case 0:
        f.kind = Connective::Atom;
        f.atom = {ring_term(2, binders, free_vars), ring_term(2, binders, free_vars)};
        return f;
      case 1:
        f.kind = Connective::Not;
        f.sub.push_back(ring_formula(depth - 1, binders, free_vars, quantifiers_left));
        return f;
      case 2: f.kind = Connective::And; break;
      case 3: f.kind = Connective::Or; break;
      case 4: f.kind = Connective::Implies; break;
      default:
        if (quantifiers_left == 0) return ring_formula(depth - 1, binders, free_vars, 0);
        f.kind = rng_() % 2 ? Connective::Exists : Connective::Forall;
        f.bound_name = "y" + std::to_string(binders.size());
        binders.push_back(f.bound_name);
        f.sub.push_back(ring_formula(depth - 1, binders, free_vars, quantifiers_left - 1));
        return f;
    }
    f.sub.push_back(ring_formula(depth - 1, binders, free_vars, quantifiers_left));
    f.sub.push_back(ring_formula(depth - 1, binders, free_vars, quantifiers_left));
    return f;
  }

  BooleTerm boole_term(int depth, const std::vector<std::string>& binders, std::size_t free_vars) {
    const int pick = static_cast<int>(rng_() % (depth <= 0 ? 3 : 6));
    BooleTerm t;
    switch (pick) {
      case 0:
        t.kind = BooleTerm::Kind::Var;
        if (!binders.empty() && rng_() % 2) {
          const std::size_t j = rng_() % binders.size();
          t.var = {binders[binders.size() - 1 - j], true, j};
        } else {
          const std::size_t k = rng_() % free_vars;
          t.var = {"v" + std::to_string(k), false, k};
        }
        return t;
      case 1: t.kind = BooleTerm::Kind::Zero; return t;
      case 2: t.kind = BooleTerm::Kind::One; return t;
      case 3: t.kind = BooleTerm::Kind::Meet; break;
      case 4: t.kind = BooleTerm::Kind::Join; break;
      default:
        t.kind = BooleTerm::Kind::Complement;
        t.args.push_back(boole_term(depth - 1, binders, free_vars));
        return t;
    }
    t.args.push_back(boole_term(depth - 1, binders, free_vars));
    t.args.push_back(boole_term(depth - 1, binders, free_vars));
    return t;
  }

  BooleFormula boole_formula(int depth, std::vector<std::string> binders, std::size_t free_vars) {
    BooleFormula f;
    const int pick = static_cast<int>(rng_() % (depth <= 0 ? 1 : 7));
    switch (pick) {
      case 0: {
        f.kind = Connective::Atom;
        const int a = static_cast<int>(rng_() % 3);
        f.atom.kind = a == 0 ? BooleAtom::Kind::Equal : a == 1 ? BooleAtom::Kind::Subset : BooleAtom::Kind::Fin;
        f.atom.lhs = boole_term(2, binders, free_vars);
        if (f.atom.kind != BooleAtom::Kind::Fin) f.atom.rhs = boole_term(2, binders, free_vars);
        return f;
      }
      case 1:
        f.kind = Connective::Not;
        f.sub.push_back(boole_formula(depth - 1, binders, free_vars));
        return f;
      case 2: f.kind = Connective::And; break;
      case 3: f.kind = Connective::Or; break;
      case 4: f.kind = Connective::Implies; break;
      default:
        f.kind = rng_() % 2 ? Connective::Exists : Connective::Forall;
        f.bound_name = "u" + std::to_string(binders.size());
        binders.push_back(f.bound_name);
        f.sub.push_back(boole_formula(depth - 1, binders, free_vars));
        return f;
    }
    f.sub.push_back(boole_formula(depth - 1, binders, free_vars));
    f.sub.push_back(boole_formula(depth - 1, binders, free_vars));
    return f;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline FiniteRing random_small_ring(std::mt19937_64& rng) {
  switch (rng() % 5) {
    case 0: return FiniteRing::integers_mod(2 + rng() % 11);
    case 1: return FiniteRing::galois_field(2, 1 + rng() % 3);
    case 2: return FiniteRing::galois_field(3, 1 + rng() % 2);
    case 3: {
      auto r = adelic::residue_ring_construct(2, 2, 1, adelic::ModPoly(adelic::parse_poly("x^2 - 2"), 32), 2 + rng() % 3);
      return FiniteRing::from_residue_ring(std::get<adelic::ResidueRing>(r));
    }
    default: return FiniteRing::integers_mod(4);
  }
}

inline FiniteFamily random_family(std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 5;
  std::vector<std::string> index;
  std::vector<FiniteRing> stalks;
  for (std::size_t i = 0; i < n; ++i) {
    index.push_back("i" + std::to_string(i));
    stalks.push_back(random_small_ring(rng));
  }
  return FiniteFamily(index, stalks);
}

inline GlobalElement random_element(std::mt19937_64& rng, const FiniteFamily& fam) {
  GlobalElement g;
  for (std::size_t i = 0; i < fam.size(); ++i) g.push_back(rng() % fam.stalk(i).size());
  return g;
}

}  // namespace testgen
