#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "relift/axiom_check.hpp"
#include "relift/functor.hpp"
#include "relift/lifting.hpp"

namespace relift {

/// A family of maps lambda_X : F(PX) -> P(FX), one per finite set, given
/// intensionally and compared extensionally on bounded universes.
class DistLaw {
 public:
  using Component = std::function<Function(const FiniteSet&)>;

  DistLaw(std::string name, FunctorPtr functor, Component component);

  const std::string& name() const { return name_; }
  const FunctorPtr& functor() const { return functor_; }

  /// The component at X, a total function F(PX) -> P(FX).  Computed on
  /// demand; carrier guards may throw resource_error.
  Function component_of(const FiniteSet& X) const;

 private:
  std::string name_;
  FunctorPtr functor_;
  Component component_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Value, Function> cache_;
};

using DistLawPtr = std::shared_ptr<const DistLaw>;

/// lambda^L, the transpose of L's lift of the membership relation.
DistLawPtr law_from_lifting(const LiftingPtr& L);

/// L^lambda, lifting R : X -|> Y to the relation carried by
/// lambda_Y after F(chi_R).
LiftingPtr lifting_from_law(const DistLawPtr& law);

enum class LawCondition {
  monotonicity,
  lax_naturality,
  lax_eilenberg_moore,
  lax_extensionality,
  symmetry,
};

const char* law_condition_name(LawCondition c);

/// Everything needed to re-run one failed instance.
struct LawCounterexample {
  LawCondition condition;
  std::vector<FiniteSet> sets;            // the quantified sets, in order
  std::optional<Function> f;              // first quantified function
  std::optional<Function> g;              // second, for monotonicity
  Value at;                               // domain element where the sides differ
  Value left;
  Value right;
  std::string detail;
};

struct LawConditionResult {
  Verdict verdict = Verdict::skipped;
  std::optional<LawCounterexample> witness;
  std::string note;
};

struct LawReport {
  std::string law;
  std::string functor;
  std::size_t bound = 0;
  LawConditionResult monotonicity;
  LawConditionResult lax_naturality;
  LawConditionResult lax_eilenberg_moore;
  LawConditionResult lax_extensionality;
  LawConditionResult symmetry;
  std::uint64_t instances_checked = 0;
  std::uint64_t instances_skipped = 0;

  const LawConditionResult& result(LawCondition c) const;
  bool core_pass() const;  // monotonicity, naturality, Eilenberg-Moore
  bool all_pass() const;
};

/// Checks the five law axioms over the bounded universe.  Instances whose
/// carriers exceed the safety limit are skipped and counted, never fatal.
LawReport check_distlaw_axioms(const DistLawPtr& law, std::size_t bound);

/// Re-evaluates a stored counterexample against a law.
bool law_counterexample_violates(const DistLawPtr& law, const LawCounterexample& ce);

}  // namespace relift
