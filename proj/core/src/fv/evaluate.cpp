#include "adelic/fv/evaluate.hpp"

#include "adelic/errors.hpp"

namespace adelic::fv {

namespace {

using Element = FiniteRing::Element;

struct RingEval {
  const FiniteRing& ring;
  std::span<const Element> free;
  std::vector<Element> bound;  // innermost binder last

  Element var(const Variable& v) const {
    if (v.bound) return bound[bound.size() - 1 - v.index];
    if (v.index >= free.size()) {
      throw PreconditionError("no value for free variable " + v.name);
    }
    return free[v.index];
  }

  Element term(const RingTerm& t) const {
    using K = RingTerm::Kind;
    switch (t.kind) {
      case K::Var:
        return var(t.var);
      case K::Zero:
        return ring.zero();
      case K::One:
        return ring.one();
      case K::Add:
        return ring.add(term(t.args[0]), term(t.args[1]));
      case K::Sub:
        return ring.sub(term(t.args[0]), term(t.args[1]));
      case K::Mul:
        return ring.mul(term(t.args[0]), term(t.args[1]));
      case K::Neg:
        return ring.neg(term(t.args[0]));
    }
    return ring.zero();
  }

  bool formula(const RingFormula& f) {
    switch (f.kind) {
      case Connective::Atom:
        return term(f.atom.lhs) == term(f.atom.rhs);
      case Connective::Not:
        return !formula(f.sub[0]);
      case Connective::And:
        return formula(f.sub[0]) && formula(f.sub[1]);
      case Connective::Or:
        return formula(f.sub[0]) || formula(f.sub[1]);
      case Connective::Implies:
        return !formula(f.sub[0]) || formula(f.sub[1]);
      case Connective::Exists:
      case Connective::Forall: {
        const bool want = f.kind == Connective::Exists;
        bool result = !want;
        bound.push_back(0);
        for (Element x = 0; x < ring.size(); ++x) {
          bound.back() = x;
          if (formula(f.sub[0]) == want) {
            result = want;
            break;
          }
        }
        bound.pop_back();
        return result;
      }
    }
    return false;
  }
};

struct BooleEval {
  std::uint32_t full;
  std::span<const IndexSet> free;
  std::vector<std::uint32_t> bound;

  std::uint32_t var(const Variable& v) const {
    if (v.bound) return bound[bound.size() - 1 - v.index];
    if (v.index >= free.size()) {
      throw PreconditionError("no value for free variable " + v.name);
    }
    return free[v.index].bits;
  }

  std::uint32_t term(const BooleTerm& t) const {
    using K = BooleTerm::Kind;
    switch (t.kind) {
      case K::Var:
        return var(t.var);
      case K::Zero:
        return 0;
      case K::One:
        return full;
      case K::Meet:
        return term(t.args[0]) & term(t.args[1]);
      case K::Join:
        return term(t.args[0]) | term(t.args[1]);
      case K::Complement:
        return full & ~term(t.args[0]);
    }
    return 0;
  }

  bool atom(const BooleAtom& a) const {
    switch (a.kind) {
      case BooleAtom::Kind::Equal:
        return term(a.lhs) == term(a.rhs);
      case BooleAtom::Kind::Subset:
        return (term(a.lhs) & ~term(a.rhs)) == 0;
      case BooleAtom::Kind::Fin:
        // every subset of a finite index set is finite
        (void)term(a.lhs);
        return true;
    }
    return false;
  }

  bool formula(const BooleFormula& f) {
    switch (f.kind) {
      case Connective::Atom:
        return atom(f.atom);
      case Connective::Not:
        return !formula(f.sub[0]);
      case Connective::And:
        return formula(f.sub[0]) && formula(f.sub[1]);
      case Connective::Or:
        return formula(f.sub[0]) || formula(f.sub[1]);
      case Connective::Implies:
        return !formula(f.sub[0]) || formula(f.sub[1]);
      case Connective::Exists:
      case Connective::Forall: {
        const bool want = f.kind == Connective::Exists;
        bool result = !want;
        bound.push_back(0);
        for (std::uint64_t s = 0; s <= full; ++s) {
          bound.back() = static_cast<std::uint32_t>(s);
          if (formula(f.sub[0]) == want) {
            result = want;
            break;
          }
        }
        bound.pop_back();
        return result;
      }
    }
    return false;
  }
};

}  // namespace

bool eval_ring_formula(const RingFormula& theta, const FiniteRing& stalk,
                       std::span<const Element> assignment) {
  if (quantifier_depth(theta) > kMaxQuantifierDepth) {
    throw CapExceeded("quantifier depth " + std::to_string(quantifier_depth(theta)) +
                      " exceeds " + std::to_string(kMaxQuantifierDepth));
  }
  if (stalk.size() > FiniteRing::kMaxOrder) throw CapExceeded("stalk order exceeds cap");
  if (assignment.size() < arity(theta)) {
    throw PreconditionError("formula has " + std::to_string(arity(theta)) +
                            " free variables but " + std::to_string(assignment.size()) +
                            " values were given");
  }
  for (Element x : assignment) {
    if (x >= stalk.size()) {
      throw PreconditionError("element " + std::to_string(x) + " is not in " + stalk.name());
    }
  }
  RingEval ev{stalk, assignment, {}};
  return ev.formula(theta);
}

IndexSet theta_set(const RingFormula& theta, const FiniteFamily& family,
                   std::span<const GlobalElement> args) {
  for (const auto& g : args) {
    if (g.size() != family.size()) {
      throw PreconditionError("global element has " + std::to_string(g.size()) +
                              " components for an index set of size " +
                              std::to_string(family.size()));
    }
  }
  IndexSet out;
  std::vector<Element> local(args.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < args.size(); ++j) local[j] = args[j][i];
    if (eval_ring_formula(theta, family.stalk(i), local)) out.bits |= 1u << i;
  }
  return out;
}

bool eval_boole(const BooleFormula& psi, std::size_t index_size,
                std::span<const IndexSet> assignment) {
  if (index_size > kMaxIndexSize) {
    throw CapExceeded("index set of size " + std::to_string(index_size) + " exceeds " +
                      std::to_string(kMaxIndexSize));
  }
  const auto full = static_cast<std::uint32_t>((std::uint64_t{1} << index_size) - 1);
  if (assignment.size() < arity(psi)) {
    throw PreconditionError("Boolean formula has " + std::to_string(arity(psi)) +
                            " free variables but " + std::to_string(assignment.size()) +
                            " sets were given");
  }
  for (const auto& s : assignment) {
    if (s.bits & ~full) throw PreconditionError("subset outside the index set");
  }
  BooleEval ev{full, assignment, {}};
  return ev.formula(psi);
}

std::string GeneralizedSentence::arity_error() const {
  if (arity(psi) > thetas.size()) {
    return "psi has arity " + std::to_string(arity(psi)) + " but only " +
           std::to_string(thetas.size()) + " thetas were given";
  }
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    if (arity(thetas[j]) > k) {
      return "theta " + std::to_string(j) + " has arity " + std::to_string(arity(thetas[j])) +
             " but the sentence takes " + std::to_string(k) + " arguments";
    }
  }
  return {};
}

bool gen_product_eval(const GeneralizedSentence& g, const FiniteFamily& family,
                      std::span<const GlobalElement> args) {
  if (auto err = g.arity_error(); !err.empty()) throw PreconditionError("arity mismatch: " + err);
  if (args.size() != g.k) {
    throw PreconditionError("arity mismatch: expected " + std::to_string(g.k) +
                            " arguments, got " + std::to_string(args.size()));
  }
  std::vector<IndexSet> sets;
  sets.reserve(g.thetas.size());
  for (const auto& theta : g.thetas) sets.push_back(theta_set(theta, family, args));
  return eval_boole(g.psi, family.size(), sets);
}

PreservationReport preservation_check(const FiniteFamily& first, const FiniteFamily& second,
                                      std::span<const PreservationCase> cases) {
  PreservationReport report;
  if (first.index() != second.index()) {
    report.precondition_failure = "index sets differ";
    return report;
  }
  std::vector<std::vector<Element>> iso;
  for (std::size_t i = 0; i < first.size(); ++i) {
    std::optional<std::vector<Element>> m;
    try {
      m = find_isomorphism(first.stalk(i), second.stalk(i));
    } catch (const CapExceeded& e) {
      report.precondition_failure = "stalk " + first.index()[i] + ": " + e.what();
      return report;
    }
    if (!m) {
      report.precondition_failure = "stalks at " + first.index()[i] + " are not isomorphic (" +
                                    first.stalk(i).name() + " vs " + second.stalk(i).name() + ")";
      return report;
    }
    iso.push_back(std::move(*m));
  }
  report.precondition_met = true;

  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& pc = cases[c];
    std::vector<GlobalElement> moved = pc.args;
    for (auto& g : moved) {
      if (g.size() != first.size()) throw PreconditionError("global element has wrong length");
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] >= first.stalk(i).size()) throw PreconditionError("element outside stalk");
        g[i] = iso[i][g[i]];
      }
    }
    const bool a = gen_product_eval(pc.sentence, first, pc.args);
    const bool b = gen_product_eval(pc.sentence, second, moved);
    ++report.checked;
    if (a != b) report.disagreements.push_back({c, a, b});
  }
  return report;
}

}  // namespace adelic::fv
