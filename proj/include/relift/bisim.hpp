#pragma once

#include <random>

#include "relift/function.hpp"
#include "relift/functor.hpp"
#include "relift/lifting.hpp"
#include "relift/relation.hpp"

namespace relift {

/// A state space with a one-step transition structure X -> FX.
class Coalgebra {
 public:
  Coalgebra(FunctorPtr functor, FiniteSet states, Function structure);

  const FunctorPtr& functor() const { return functor_; }
  const FiniteSet& states() const { return states_; }
  const Function& structure() const { return structure_; }

  /// The successor object of one state.
  const Value& step(const Value& state) const { return structure_.apply(state); }

 private:
  FunctorPtr functor_;
  FiniteSet states_;
  Function structure_;
};

/// One refinement sweep: keeps (x,y) when the successor objects are related
/// by the lifted relation.
Relation refine_step(const LiftingPtr& L, const Coalgebra& c, const Coalgebra& d,
                     const Relation& R);

/// Greatest post-fixed point of refine_step, from the full relation downward.
/// Each iterate intersects with the previous one, so the sequence descends
/// and terminates even when L is not monotone.
Relation greatest_bisim(const LiftingPtr& L, const Coalgebra& c, const Coalgebra& d);

bool is_bisimulation(const LiftingPtr& L, const Coalgebra& c, const Coalgebra& d,
                     const Relation& R);

/// Strong bisimilarity for powerset coalgebras by direct forth/back
/// iteration on successor sets.  Shares no code with the lifting engine.
Relation kripke_bisim_oracle(const Coalgebra& c, const Coalgebra& d);

/// A coalgebra whose structure picks uniformly from the functor carrier.
/// Draws exactly |states| values from rng.
Coalgebra random_coalgebra(const FunctorPtr& F, const FiniteSet& states,
                           std::mt19937_64& rng);

}  // namespace relift
