#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relift/lifting.hpp"

namespace relift {

enum class Verdict { pass, fail, skipped };

const char* verdict_name(Verdict v);

/// The lifting conditions, in report order.  The first four are required of
/// a lax lifting; the last two are the optional extras.
enum class LiftCondition {
  monotonicity,
  lax_functoriality,
  graph_inequality,
  converse_graph_inequality,
  diagonal_preservation,
  symmetry,
};

const char* condition_name(LiftCondition c);

/// First violation in the fixed enumeration order.  Carries the data needed
/// to re-evaluate the condition from scratch.
struct Counterexample {
  LiftCondition condition = LiftCondition::monotonicity;
  FiniteSet X, Y, Z;              // Z only used by lax functoriality
  std::optional<Relation> R;
  std::optional<Relation> S;      // monotonicity: the larger relation
  std::optional<Function> f;      // graph conditions
  Value left, right;              // offending pair of lifted elements
  std::string detail;
};

struct ConditionResult {
  Verdict verdict = Verdict::pass;
  std::optional<Counterexample> witness;
  std::string note;
};

struct AxiomReport {
  std::string lifting;
  std::string functor;
  std::size_t bound = 0;
  ConditionResult monotonicity;
  ConditionResult lax_functoriality;
  ConditionResult graph_inequality;
  ConditionResult converse_graph_inequality;
  ConditionResult diagonal_preservation;
  ConditionResult symmetry;
  /// Number of quantifier instances evaluated; deterministic for a given
  /// lifting and bound.
  std::uint64_t instances_checked = 0;

  const ConditionResult& result(LiftCondition c) const;
  /// Conditions 1-3 (the required ones).
  bool core_pass() const;
  bool all_pass() const;
};

/// Universe the checker quantifies over: all subsets of the atom pool
/// {a0,a1,a2} with at most `bound` elements, ordered by size then by pool
/// mask.  `bound` must be at most 3.
std::vector<FiniteSet> axiom_universe(std::size_t bound);

/// All relations X -/-> Y in mask order (bit i*|Y|+j ascending).
std::vector<Relation> all_relations(const FiniteSet& X, const FiniteSet& Y);

/// All functions X -> Y in image-tuple order (first source element varies
/// fastest); empty when X is nonempty and Y is empty.
std::vector<Function> all_functions(const FiniteSet& X, const FiniteSet& Y);

/// Exhaustive check of the six conditions over the bounded universe.
/// Resource errors from carrier construction propagate to the caller.
AxiomReport check_lifting_axioms(const LiftingPtr& L, std::size_t bound);

/// Re-evaluates the witnessed condition; true when the stored data indeed
/// violates it.
bool counterexample_violates(const LiftingPtr& L, const Counterexample& ce);

}  // namespace relift
