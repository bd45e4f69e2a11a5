#include "relift/distlaw.hpp"

#include <map>
#include <utility>

#include "relift/errors.hpp"
#include "relift/kleisli.hpp"

namespace relift {

namespace {

bool value_subseteq(const Value& a, const Value& b) {
  for (const auto& x : a.elements()) {
    if (!b.set_contains(x)) return false;
  }
  return true;
}

}  // namespace

DistLaw::DistLaw(std::string name, FunctorPtr functor, Component component)
    : name_(std::move(name)), functor_(std::move(functor)), component_(std::move(component)) {
  if (!functor_ || !component_) throw contract_error("distributive law needs a functor and a component");
}

Function DistLaw::component_of(const FiniteSet& X) const {
  const Value key = X.as_value();
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Function built = component_(X);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return cache_.emplace(key, std::move(built)).first->second;
}

DistLawPtr law_from_lifting(const LiftingPtr& L) {
  if (!L) throw contract_error("law_from_lifting: null lifting");
  return std::make_shared<DistLaw>(
      "law(" + L->name() + ")", L->functor(),
      [L](const FiniteSet& X) { return to_kleisli(L->lift_of(membership(X))); });
}

namespace {

class LawLifting final : public Lifting {
 public:
  explicit LawLifting(DistLawPtr law)
      : law_(std::move(law)), name_("lift(" + law_->name() + ")") {}

  const std::string& name() const override { return name_; }
  const FunctorPtr& functor() const override { return law_->functor(); }

  Relation lift_of(const Relation& R) const override {
    const FunctorPtr& F = law_->functor();
    const Function chi = to_kleisli(R);
    return from_kleisli(law_->component_of(R.target()).after(F->map(chi)));
  }

 private:
  DistLawPtr law_;
  std::string name_;
};

}  // namespace

LiftingPtr lifting_from_law(const DistLawPtr& law) {
  if (!law) throw contract_error("lifting_from_law: null law");
  return std::make_shared<LawLifting>(law);
}

const char* law_condition_name(LawCondition c) {
  switch (c) {
    case LawCondition::monotonicity: return "monotonicity";
    case LawCondition::lax_naturality: return "lax-naturality";
    case LawCondition::lax_eilenberg_moore: return "lax-eilenberg-moore";
    case LawCondition::lax_extensionality: return "lax-extensionality";
    case LawCondition::symmetry: return "symmetry";
  }
  return "?";
}

const LawConditionResult& LawReport::result(LawCondition c) const {
  switch (c) {
    case LawCondition::monotonicity: return monotonicity;
    case LawCondition::lax_naturality: return lax_naturality;
    case LawCondition::lax_eilenberg_moore: return lax_eilenberg_moore;
    case LawCondition::lax_extensionality: return lax_extensionality;
    case LawCondition::symmetry: return symmetry;
  }
  return monotonicity;
}

bool LawReport::core_pass() const {
  return monotonicity.verdict == Verdict::pass && lax_naturality.verdict == Verdict::pass &&
         lax_eilenberg_moore.verdict == Verdict::pass;
}

bool LawReport::all_pass() const {
  return core_pass() && lax_extensionality.verdict == Verdict::pass &&
         symmetry.verdict == Verdict::pass;
}

namespace {

/// Component and functor-image tables are rebuilt constantly during a sweep;
/// both are deterministic per key, so plain memo maps keep the sweep linear.
class LawChecker {
 public:
  LawChecker(const DistLawPtr& law, std::size_t bound)
      : law_(law), F_(law->functor()), bound_(bound) {
    report_.law = law->name();
    report_.functor = F_->name();
    report_.bound = bound;
    universe_ = axiom_universe(bound);
  }

  LawReport run() {
    check_monotonicity(report_.monotonicity);
    check_lax_naturality(report_.lax_naturality);
    check_eilenberg_moore(report_.lax_eilenberg_moore);
    check_extensionality(report_.lax_extensionality);
    check_symmetry(report_.symmetry);
    return std::move(report_);
  }

 private:
  const Function& component(const FiniteSet& X) {
    auto it = components_.find(X.as_value());
    if (it != components_.end()) return it->second;
    return components_.emplace(X.as_value(), law_->component_of(X)).first->second;
  }

  /// Runs one quantified instance; resource blowups are counted, not fatal.
  template <typename Body>
  void instance(LawConditionResult& slot, Body&& body) {
    if (slot.verdict == Verdict::fail) return;
    try {
      ++report_.instances_checked;
      ++checked_here_;
      body();
    } catch (const resource_error&) {
      --report_.instances_checked;
      --checked_here_;
      ++report_.instances_skipped;
      ++skipped_here_;
    }
  }

  void begin(LawConditionResult&) { checked_here_ = skipped_here_ = 0; }

  void settle(LawConditionResult& slot) {
    if (slot.verdict == Verdict::fail) return;
    if (checked_here_ == 0) {
      slot.verdict = Verdict::skipped;
      slot.note = "skipped: resource bound";
      return;
    }
    slot.verdict = Verdict::pass;
    if (skipped_here_ > 0) {
      slot.note = "skipped " + std::to_string(skipped_here_) + " instance(s): resource bound";
    }
  }

  void fail(LawConditionResult& slot, LawCounterexample ce) {
    slot.verdict = Verdict::fail;
    slot.witness = std::move(ce);
  }

  void check_monotonicity(LawConditionResult& slot) {
    begin(slot);
    for (const auto& X : universe_) {
      for (const auto& Y : universe_) {
        const FiniteSet PY = powerset(Y);
        const auto fs = all_functions(X, PY);
        for (const auto& f : fs) {
          for (const auto& g : fs) {
            bool below = true;
            for (std::size_t i = 0; i < X.size() && below; ++i) {
              below = value_subseteq(f.target().at(f.apply_index(i)), g.target().at(g.apply_index(i)));
            }
            if (!below) continue;
            instance(slot, [&] {
              const Function lf = component(Y).after(F_->map(f));
              const Function lg = component(Y).after(F_->map(g));
              for (std::size_t i = 0; i < lf.source().size(); ++i) {
                const Value& left = lf.target().at(lf.apply_index(i));
                const Value& right = lg.target().at(lg.apply_index(i));
                if (!value_subseteq(left, right)) {
                  fail(slot, {LawCondition::monotonicity,
                              {X, Y},
                              f,
                              g,
                              lf.source().at(i),
                              left,
                              right,
                              "lambda_Y . Ff exceeds lambda_Y . Fg"});
                  return;
                }
              }
            });
            if (slot.verdict == Verdict::fail) return;
          }
        }
      }
    }
    settle(slot);
  }

  void check_lax_naturality(LawConditionResult& slot) {
    begin(slot);
    const FunctorPtr P = powerset_functor();
    for (const auto& X : universe_) {
      for (const auto& Y : universe_) {
        for (const auto& f : all_functions(X, Y)) {
          instance(slot, [&] {
            const Function lhs = P->map(F_->map(f)).after(component(X));
            const Function rhs = component(Y).after(F_->map(P->map(f)));
            for (std::size_t i = 0; i < lhs.source().size(); ++i) {
              const Value& left = lhs.target().at(lhs.apply_index(i));
              const Value& right = rhs.target().at(rhs.apply_index(i));
              if (!value_subseteq(left, right)) {
                fail(slot, {LawCondition::lax_naturality,
                            {X, Y},
                            f,
                            std::nullopt,
                            lhs.source().at(i),
                            left,
                            right,
                            "P(Ff) . lambda_X exceeds lambda_Y . F(Pf)"});
                return;
              }
            }
          });
          if (slot.verdict == Verdict::fail) return;
        }
      }
    }
    settle(slot);
  }

  void check_eilenberg_moore(LawConditionResult& slot) {
    begin(slot);
    const FunctorPtr P = powerset_functor();
    for (const auto& Z : universe_) {
      instance(slot, [&] {
        const FiniteSet PZ = powerset(Z);
        const FiniteSet FZ = F_->carrier(Z);
        const Function lamZ = component(Z);
        const Function lhs = pow_mult(FZ).after(P->map(lamZ)).after(component(PZ));
        const Function rhs = lamZ.after(F_->map(pow_mult(Z)));
        for (std::size_t i = 0; i < lhs.source().size(); ++i) {
          const Value& left = lhs.target().at(lhs.apply_index(i));
          const Value& right = rhs.target().at(rhs.apply_index(i));
          if (!value_subseteq(left, right)) {
            fail(slot, {LawCondition::lax_eilenberg_moore,
                        {Z},
                        std::nullopt,
                        std::nullopt,
                        lhs.source().at(i),
                        left,
                        right,
                        "multiplication square exceeds lambda_Z . F(mu_Z)"});
            return;
          }
        }
      });
      if (slot.verdict == Verdict::fail) return;
      instance(slot, [&] {
        const FiniteSet FZ = F_->carrier(Z);
        const Function lhs = component(Z).after(F_->map(pow_unit(Z)));
        const Function rhs = pow_unit(FZ);
        for (std::size_t i = 0; i < lhs.source().size(); ++i) {
          const Value& left = lhs.target().at(lhs.apply_index(i));
          const Value& right = rhs.target().at(rhs.apply_index(i));
          if (!value_subseteq(right, left)) {
            fail(slot, {LawCondition::lax_eilenberg_moore,
                        {Z},
                        std::nullopt,
                        std::nullopt,
                        lhs.source().at(i),
                        left,
                        right,
                        "lambda_Z . F(eta_Z) is not above eta_FZ"});
            return;
          }
        }
      });
      if (slot.verdict == Verdict::fail) return;
    }
    settle(slot);
  }

  void check_extensionality(LawConditionResult& slot) {
    begin(slot);
    for (const auto& Z : universe_) {
      instance(slot, [&] {
        const FiniteSet FZ = F_->carrier(Z);
        const Function lhs = component(Z).after(F_->map(pow_unit(Z)));
        const Function rhs = pow_unit(FZ);
        for (std::size_t i = 0; i < lhs.source().size(); ++i) {
          const Value& left = lhs.target().at(lhs.apply_index(i));
          const Value& right = rhs.target().at(rhs.apply_index(i));
          if (!value_subseteq(left, right)) {
            fail(slot, {LawCondition::lax_extensionality,
                        {Z},
                        std::nullopt,
                        std::nullopt,
                        lhs.source().at(i),
                        left,
                        right,
                        "lambda_Z . F(eta_Z) is not below eta_FZ"});
            return;
          }
        }
      });
      if (slot.verdict == Verdict::fail) return;
    }
    settle(slot);
  }

  void check_symmetry(LawConditionResult& slot) {
    begin(slot);
    for (const auto& X : universe_) {
      for (const auto& Y : universe_) {
        const FiniteSet PY = powerset(Y);
        for (const auto& f : all_functions(X, PY)) {
          instance(slot, [&] {
            const Function lhs = flat(component(Y).after(F_->map(f)));
            const Function rhs = component(X).after(F_->map(flat(f)));
            for (std::size_t i = 0; i < lhs.source().size(); ++i) {
              const Value& left = lhs.target().at(lhs.apply_index(i));
              const Value& right = rhs.target().at(rhs.apply_index(i));
              if (left != right) {
                fail(slot, {LawCondition::symmetry,
                            {X, Y},
                            f,
                            std::nullopt,
                            lhs.source().at(i),
                            left,
                            right,
                            "(lambda_Y . Ff)-flat differs from lambda_X . F(f-flat)"});
                return;
              }
            }
          });
          if (slot.verdict == Verdict::fail) return;
        }
      }
    }
    settle(slot);
  }

  DistLawPtr law_;
  FunctorPtr F_;
  std::size_t bound_;
  LawReport report_;
  std::vector<FiniteSet> universe_;
  std::map<Value, Function> components_;
  std::uint64_t checked_here_ = 0;
  std::uint64_t skipped_here_ = 0;
};

}  // namespace

LawReport check_distlaw_axioms(const DistLawPtr& law, std::size_t bound) {
  if (!law) throw contract_error("check_distlaw_axioms: null law");
  return LawChecker(law, bound).run();
}

bool law_counterexample_violates(const DistLawPtr& law, const LawCounterexample& ce) {
  const FunctorPtr& F = law->functor();
  const FunctorPtr P = powerset_functor();
  const auto lam = [&](const FiniteSet& S) { return law->component_of(S); };
  Function lhs = Function::identity(FiniteSet());
  Function rhs = lhs;
  switch (ce.condition) {
    case LawCondition::monotonicity: {
      lhs = lam(ce.sets.at(1)).after(F->map(*ce.f));
      rhs = lam(ce.sets.at(1)).after(F->map(*ce.g));
      break;
    }
    case LawCondition::lax_naturality: {
      lhs = P->map(F->map(*ce.f)).after(lam(ce.sets.at(0)));
      rhs = lam(ce.sets.at(1)).after(F->map(P->map(*ce.f)));
      break;
    }
    case LawCondition::lax_eilenberg_moore: {
      const FiniteSet& Z = ce.sets.at(0);
      const FiniteSet FZ = F->carrier(Z);
      if (ce.detail.find("eta") != std::string::npos) {
        // unit inequality: eta_FZ must be below lambda_Z . F(eta_Z)
        lhs = pow_unit(FZ);
        rhs = lam(Z).after(F->map(pow_unit(Z)));
        break;
      }
      lhs = pow_mult(FZ).after(P->map(lam(Z))).after(lam(powerset(Z)));
      rhs = lam(Z).after(F->map(pow_mult(Z)));
      break;
    }
    case LawCondition::lax_extensionality: {
      const FiniteSet& Z = ce.sets.at(0);
      lhs = lam(Z).after(F->map(pow_unit(Z)));
      rhs = pow_unit(F->carrier(Z));
      break;
    }
    case LawCondition::symmetry: {
      lhs = flat(lam(ce.sets.at(1)).after(F->map(*ce.f)));
      rhs = lam(ce.sets.at(0)).after(F->map(flat(*ce.f)));
      const Value left = lhs.apply(ce.at);
      const Value right = rhs.apply(ce.at);
      return left != right;
    }
  }
  return !value_subseteq(lhs.apply(ce.at), rhs.apply(ce.at));
}

}  // namespace relift
