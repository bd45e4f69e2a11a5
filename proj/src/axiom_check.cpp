#include "relift/axiom_check.hpp"

#include <map>

#include "relift/errors.hpp"

namespace relift {

namespace {

constexpr std::size_t kAtomPool = 3;

/// Lift results per (source, target) pair, indexed by relation mask.
/// Computed lazily; lifting one relation never depends on another, so the
/// cache only changes speed, not results.
class LiftTable {
 public:
  explicit LiftTable(const LiftingPtr& L) : L_(L) {}

  const Relation& lift(const Relation& R) {
    auto& slot = slots_[{R.source().as_value(), R.target().as_value()}];
    if (slot.empty()) slot.resize(std::uint64_t{1} << (R.source().size() * R.target().size()));
    auto& entry = slot[R.as_mask()];
    if (!entry) entry = L_->lift_of(R);
    return *entry;
  }

 private:
  LiftingPtr L_;
  std::map<std::pair<Value, Value>, std::vector<std::optional<Relation>>> slots_;
};

/// First pair of `probe` not contained in `bound`, in index order.
std::optional<std::pair<Value, Value>> first_excess(const Relation& probe, const Relation& bound) {
  for (std::size_t i = 0; i < probe.source().size(); ++i) {
    for (std::size_t j = 0; j < probe.target().size(); ++j) {
      if (probe.contains(i, j) && !bound.contains(i, j)) {
        return std::make_pair(probe.source().at(i), probe.target().at(j));
      }
    }
  }
  return std::nullopt;
}

class Checker {
 public:
  Checker(const LiftingPtr& L, std::size_t bound)
      : L_(L), universe_(axiom_universe(bound)), table_(L) {
    report_.lifting = L->name();
    report_.functor = L->functor()->name();
    report_.bound = bound;
  }

  AxiomReport run() {
    check_monotonicity();
    check_lax_functoriality();
    check_graph_conditions();
    check_diagonal();
    check_symmetry();
    return report_;
  }

 private:
  void fail(ConditionResult& slot, Counterexample ce) {
    if (slot.verdict == Verdict::fail) return;
    slot.verdict = Verdict::fail;
    slot.witness = std::move(ce);
  }

  void check_monotonicity() {
    auto& slot = report_.monotonicity;
    for (const auto& X : universe_) {
      for (const auto& Y : universe_) {
        const auto rels = all_relations(X, Y);
        for (const auto& R : rels) {
          const std::uint64_t r_mask = R.as_mask();
          for (const auto& S : rels) {
            if ((r_mask & ~S.as_mask()) != 0) continue;
            ++report_.instances_checked;
            if (slot.verdict == Verdict::fail) continue;
            if (table_.lift(R).subset_of(table_.lift(S))) continue;
            const auto excess = first_excess(table_.lift(R), table_.lift(S));
            fail(slot, {LiftCondition::monotonicity, X, Y, {}, R, S, {}, excess->first,
                        excess->second,
                        "R is below S but the lifted pair is only in the lift of R"});
          }
        }
      }
    }
  }

  void check_lax_functoriality() {
    auto& slot = report_.lax_functoriality;
    for (const auto& X : universe_) {
      for (const auto& Y : universe_) {
        const auto first = all_relations(X, Y);
        for (const auto& Z : universe_) {
          const auto second = all_relations(Y, Z);
          for (const auto& R : first) {
            for (const auto& S : second) {
              ++report_.instances_checked;
              if (slot.verdict == Verdict::fail) continue;
              const Relation lhs = compose(table_.lift(R), table_.lift(S));
              const Relation& rhs = table_.lift(compose(R, S));
              if (lhs.subset_of(rhs)) continue;
              const auto excess = first_excess(lhs, rhs);
              fail(slot, {LiftCondition::lax_functoriality, X, Y, Z, R, S, {}, excess->first,
                          excess->second,
                          "composite of lifts escapes the lift of the composite"});
            }
          }
        }
      }
    }
  }

  void check_graph_conditions() {
    auto& forward = report_.graph_inequality;
    auto& backward = report_.converse_graph_inequality;
    for (const auto& X : universe_) {
      for (const auto& Y : universe_) {
        for (const auto& f : all_functions(X, Y)) {
          const Function Ff = L_->functor()->map(f);
          ++report_.instances_checked;
          if (forward.verdict != Verdict::fail) {
            const Relation probe = graph(Ff);
            const Relation& bound = table_.lift(graph(f));
            if (!probe.subset_of(bound)) {
              const auto excess = first_excess(probe, bound);
              fail(forward, {LiftCondition::graph_inequality, X, Y, {}, {}, {}, f, excess->first,
                             excess->second, "graph of the mapped function escapes the lift"});
            }
          }
          ++report_.instances_checked;
          if (backward.verdict != Verdict::fail) {
            const Relation probe = converse(graph(Ff));
            const Relation& bound = table_.lift(converse(graph(f)));
            if (!probe.subset_of(bound)) {
              const auto excess = first_excess(probe, bound);
              fail(backward,
                   {LiftCondition::converse_graph_inequality, X, Y, {}, {}, {}, f, excess->first,
                    excess->second,
                    "converse graph of the mapped function escapes the lift"});
            }
          }
        }
      }
    }
  }

  void check_diagonal() {
    auto& slot = report_.diagonal_preservation;
    for (const auto& X : universe_) {
      ++report_.instances_checked;
      if (slot.verdict == Verdict::fail) continue;
      const Relation lifted = table_.lift(diagonal(X));
      const Relation bound = diagonal(lifted.source());
      if (lifted.subset_of(bound)) continue;
      const auto excess = first_excess(lifted, bound);
      fail(slot, {LiftCondition::diagonal_preservation, X, X, {}, diagonal(X), {}, {},
                  excess->first, excess->second, "lift of the diagonal relates distinct elements"});
    }
  }

  void check_symmetry() {
    auto& slot = report_.symmetry;
    for (const auto& X : universe_) {
      for (const auto& Y : universe_) {
        for (const auto& R : all_relations(X, Y)) {
          ++report_.instances_checked;
          if (slot.verdict == Verdict::fail) continue;
          const Relation lhs = table_.lift(converse(R));
          const Relation rhs = converse(table_.lift(R));
          if (lhs == rhs) continue;
          auto excess = first_excess(lhs, rhs);
          std::string detail = "pair is in the lift of the converse only";
          if (!excess) {
            excess = first_excess(rhs, lhs);
            detail = "pair is in the converse of the lift only";
          }
          fail(slot, {LiftCondition::symmetry, X, Y, {}, R, {}, {}, excess->first, excess->second,
                      std::move(detail)});
        }
      }
    }
  }

  LiftingPtr L_;
  std::vector<FiniteSet> universe_;
  LiftTable table_;
  AxiomReport report_;
};

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "counterexample";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

const char* condition_name(LiftCondition c) {
  switch (c) {
    case LiftCondition::monotonicity:
      return "monotonicity";
    case LiftCondition::lax_functoriality:
      return "lax-functoriality";
    case LiftCondition::graph_inequality:
      return "graph-inequality";
    case LiftCondition::converse_graph_inequality:
      return "converse-graph-inequality";
    case LiftCondition::diagonal_preservation:
      return "diagonal-preservation";
    case LiftCondition::symmetry:
      return "symmetry";
  }
  return "?";
}

const ConditionResult& AxiomReport::result(LiftCondition c) const {
  switch (c) {
    case LiftCondition::monotonicity:
      return monotonicity;
    case LiftCondition::lax_functoriality:
      return lax_functoriality;
    case LiftCondition::graph_inequality:
      return graph_inequality;
    case LiftCondition::converse_graph_inequality:
      return converse_graph_inequality;
    case LiftCondition::diagonal_preservation:
      return diagonal_preservation;
    case LiftCondition::symmetry:
      return symmetry;
  }
  throw contract_error("unknown lifting condition");
}

bool AxiomReport::core_pass() const {
  return monotonicity.verdict == Verdict::pass && lax_functoriality.verdict == Verdict::pass &&
         graph_inequality.verdict == Verdict::pass &&
         converse_graph_inequality.verdict == Verdict::pass;
}

bool AxiomReport::all_pass() const {
  return core_pass() && diagonal_preservation.verdict == Verdict::pass &&
         symmetry.verdict == Verdict::pass;
}

std::vector<FiniteSet> axiom_universe(std::size_t bound) {
  if (bound > kAtomPool) {
    throw contract_error("universe bound must be at most " + std::to_string(kAtomPool));
  }
  std::vector<FiniteSet> out;
  for (std::size_t size = 0; size <= bound; ++size) {
    for (std::uint32_t mask = 0; mask < (1u << kAtomPool); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      std::vector<Value> elems;
      for (std::size_t b = 0; b < kAtomPool; ++b) {
        if (mask >> b & 1u) elems.push_back(Value::atom(b));
      }
      out.push_back(FiniteSet::of(std::move(elems)));
    }
  }
  return out;
}

std::vector<Relation> all_relations(const FiniteSet& X, const FiniteSet& Y) {
  const std::size_t bits = X.size() * Y.size();
  if (bits > 20) throw contract_error("relation enumeration limited to 20 bits");
  std::vector<Relation> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    out.push_back(Relation::from_mask(X, Y, mask));
  }
  return out;
}

std::vector<Function> all_functions(const FiniteSet& X, const FiniteSet& Y) {
  std::vector<Function> out;
  if (X.empty()) {
    out.push_back(Function::from_indices(X, Y, {}));
    return out;
  }
  if (Y.empty()) return out;
  std::vector<std::uint32_t> image(X.size(), 0);
  while (true) {
    out.push_back(Function::from_indices(X, Y, image));
    std::size_t i = 0;
    while (i < image.size() && image[i] + 1 == Y.size()) image[i++] = 0;
    if (i == image.size()) break;
    ++image[i];
  }
  return out;
}

AxiomReport check_lifting_axioms(const LiftingPtr& L, std::size_t bound) {
  if (!L) throw contract_error("axiom check of a null lifting");
  return Checker(L, bound).run();
}

bool counterexample_violates(const LiftingPtr& L, const Counterexample& ce) {
  switch (ce.condition) {
    case LiftCondition::monotonicity: {
      if (!ce.R || !ce.S || !ce.R->subset_of(*ce.S)) return false;
      return L->lift_of(*ce.R).contains(ce.left, ce.right) &&
             !L->lift_of(*ce.S).contains(ce.left, ce.right);
    }
    case LiftCondition::lax_functoriality: {
      if (!ce.R || !ce.S) return false;
      return compose(L->lift_of(*ce.R), L->lift_of(*ce.S)).contains(ce.left, ce.right) &&
             !L->lift_of(compose(*ce.R, *ce.S)).contains(ce.left, ce.right);
    }
    case LiftCondition::graph_inequality: {
      if (!ce.f) return false;
      return graph(L->functor()->map(*ce.f)).contains(ce.left, ce.right) &&
             !L->lift_of(graph(*ce.f)).contains(ce.left, ce.right);
    }
    case LiftCondition::converse_graph_inequality: {
      if (!ce.f) return false;
      return converse(graph(L->functor()->map(*ce.f))).contains(ce.left, ce.right) &&
             !L->lift_of(converse(graph(*ce.f))).contains(ce.left, ce.right);
    }
    case LiftCondition::diagonal_preservation: {
      return ce.left != ce.right && L->lift_of(diagonal(ce.X)).contains(ce.left, ce.right);
    }
    case LiftCondition::symmetry: {
      if (!ce.R) return false;
      return L->lift_of(converse(*ce.R)).contains(ce.left, ce.right) !=
             converse(L->lift_of(*ce.R)).contains(ce.left, ce.right);
    }
  }
  return false;
}

}  // namespace relift
