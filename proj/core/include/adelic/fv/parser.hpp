#pragma once

#include "adelic/fv/formula.hpp"

#include <string_view>

namespace adelic::fv {

// Concrete syntax, ASCII only:
//
//   formula := implication
//   implication := disjunction [ "->" implication ]
//   disjunction := conjunction { "or" conjunction }
//   conjunction := unary { "and" unary }
//   unary := "not" unary | ("exists" | "forall") ident unary | "(" formula ")" | atom
//
// Ring atoms are `term = term` with term built from variables, 0, 1 and
// + - * (unary minus allowed). Boolean atoms are `bterm = bterm`,
// `bterm sub bterm` and `Fin(bterm)`, with bterm built from variables, 0, 1,
// & (meet), | (join) and ~ (complement). Free ring variables are w0, w1, ...
// and free Boolean variables v0, v1, ...; any identifier may be bound by a
// quantifier. Parse errors throw adelic::ParseError with the position.

RingFormula parse_ring_formula(std::string_view text);
BooleFormula parse_boole_formula(std::string_view text);

}  // namespace adelic::fv
