#pragma once

#include "relift/function.hpp"
#include "relift/relation.hpp"

namespace relift {

/// chi_R : X -> P(Y), x |-> {y | x R y}.  The target is the powerset carrier
/// of R's target.
Function to_kleisli(const Relation& R);

/// Inverse of to_kleisli: f : X -> P(Y) gives the relation x R y iff y in f(x).
/// The target of f must be a full powerset carrier.
Relation from_kleisli(const Function& f);

/// flat(f) : Y -> P(X), y |-> {x | f(x) contains y}, for f : X -> P(Y).
Function flat(const Function& f);

/// Totalization of a relation: a fresh point absorbs the elements that are
/// unrelated on either side, making the result total and surjective while the
/// original relation is recoverable as gr(into_source);completed;gr_conv(into_target).
struct Totalization {
  FiniteSet source_star;   // X extended with the fresh point
  FiniteSet target_star;   // Y extended with the fresh point
  Relation completed;      // R*
  Function into_source;    // X -> X*
  Function into_target;    // Y -> Y*
};

/// The fresh point used by totalize; reserved, never part of user universes.
const Value& totalization_point();

Totalization totalize(const Relation& R);

}  // namespace relift
