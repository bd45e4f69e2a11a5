#pragma once

#include <string>
#include <vector>

#include "relift/functor.hpp"
#include "relift/nat_trans.hpp"
#include "relift/relation.hpp"

namespace relift {

/// Relational lifting of an endofunctor: sends R : X -/-> Y to a relation
/// between the F-carriers of X and Y.  Whether the result obeys the lax
/// lifting conditions is established by check_lifting_axioms, not assumed.
class Lifting {
 public:
  virtual ~Lifting() = default;

  virtual const std::string& name() const = 0;
  virtual const FunctorPtr& functor() const = 0;
  virtual Relation lift_of(const Relation& R) const = 0;
};

using LiftingPtr = std::shared_ptr<const Lifting>;

/// One of the four guard formulas: a choice of polarity for the empty-set
/// test paired with a choice of polarity for the full-set test.
struct RhoFormula {
  bool negated_bot = false;  // test becomes "empty set absent"
  bool negated_top = false;  // test becomes "full set absent"

  unsigned index() const { return (negated_bot ? 2u : 0u) | (negated_top ? 1u : 0u); }
  static RhoFormula from_index(unsigned i);
  RhoFormula negated() const { return {!negated_bot, !negated_top}; }
  std::string text() const;
};

/// Full relation on the lifted carriers.
LiftingPtr top_lift(FunctorPtr F);
/// Span lifting: project F applied to the pair set of R.
LiftingPtr barr_lift(FunctorPtr F);
/// Direct two-clause formula on subsets; P only.
LiftingPtr egli_milner_lift();
/// Forward clause only: every element of u reaches v; P only.
LiftingPtr hoare_lift();
/// Backward clause only: every element of v is reached from u; P only.
LiftingPtr smyth_lift();
/// Forth/back lifting on up-closed families; M only.
LiftingPtr mtilde_lift();
/// Guard-formula lifting on neighbourhood families; N only.  Bit i of
/// `j_mask` selects RhoFormula::from_index(i); 0..15.
LiftingPtr lj_lift(unsigned j_mask);
/// Pointwise intersection; all parts must share the functor.
LiftingPtr meet_lift(std::vector<LiftingPtr> parts);
/// Conjugation by converse.
LiftingPtr twiddle_lift(LiftingPtr inner);
/// Pullback of `inner` along the components of `eta`.
LiftingPtr transport_lift(NatTransPtr eta, LiftingPtr inner);

/// Up-closed family over the pair set of R whose projections recover U and
/// V.  Requires R total and surjective and (U,V) in mtilde_lift(R).
Value mtilde_witness(const Relation& R, const Value& U, const Value& V);

/// Parses a lifting expression against the given functor:
///   top | barr | mtilde | hoare | smyth | em | LJ:<0..15>
///   | meet(e1,e2,...) | twiddle(e) | transport(iota|singleton, e)
LiftingPtr parse_lifting(const std::string& text, const FunctorPtr& functor);

}  // namespace relift
