#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "relift/errors.hpp"
#include "relift/functor.hpp"
#include "relift/nat_trans.hpp"

using namespace relift;

namespace {

Value a(std::uint64_t i) { return Value::atom(i); }

std::vector<FiniteSet> small_universe(std::size_t max_size) {
  std::vector<FiniteSet> out;
  for (std::size_t size = 0; size <= max_size; ++size) {
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      std::vector<Value> elems;
      for (std::size_t b = 0; b < 3; ++b) {
        if (mask >> b & 1u) elems.push_back(a(b));
      }
      out.push_back(FiniteSet::of(std::move(elems)));
    }
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

bool value_subset(const Value& v, const Value& w) {
  for (const auto& e : v.elements()) {
    if (!w.set_contains(e)) return false;
  }
  return true;
}

// All families over X built from P(P(X)), filtered at the Value level.
FiniteSet upclosed_families_oracle(const FiniteSet& X) {
  const FiniteSet subsets = powerset(X);
  std::vector<Value> keep;
  for (const auto& family : powerset(subsets).values()) {
    bool closed = true;
    for (const auto& u : family.elements()) {
      for (const auto& w : subsets.values()) {
        if (value_subset(u, w) && !family.set_contains(w)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) keep.push_back(family);
  }
  return FiniteSet::of(std::move(keep));
}

// Inverse-image action computed on Values only: (Nf)U = {v | f^{-1}(v) in U}.
Value neighbourhood_action_oracle(const Function& f, const Value& U) {
  std::vector<Value> out;
  for (const auto& v : powerset(f.target()).values()) {
    std::vector<Value> pre;
    for (const auto& x : f.source().values()) {
      if (v.set_contains(f.apply(x))) pre.push_back(x);
    }
    if (U.set_contains(Value::set(std::move(pre)))) out.push_back(v);
  }
  return Value::set(std::move(out));
}

}  // namespace

TEST_CASE("carrier sizes of the five functors") {
  const std::size_t pow_sizes[] = {1, 2, 4, 8, 16};
  const std::size_t nbhd_sizes[] = {2, 4, 16, 256, 65536};
  const std::size_t mono_sizes[] = {2, 3, 6, 20, 168};
  for (std::size_t n = 0; n <= 4; ++n) {
    const FiniteSet X = FiniteSet::atoms(n);
    CHECK(powerset_functor()->carrier(X).size() == pow_sizes[n]);
    CHECK(neighbourhood_functor()->carrier(X).size() == nbhd_sizes[n]);
    CHECK(monotone_neighbourhood_functor()->carrier(X).size() == mono_sizes[n]);
    CHECK(identity_functor()->carrier(X) == X);
    CHECK(constant_functor(3)->carrier(X) == FiniteSet::atoms(3));
  }
}

TEST_CASE("neighbourhood carrier is the double powerset") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const FiniteSet X = FiniteSet::atoms(n);
    CHECK(neighbourhood_functor()->carrier(X) == powerset(powerset(X)));
  }
}

TEST_CASE("monotone carrier matches the up-closed filter oracle") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const FiniteSet X = FiniteSet::atoms(n);
    CHECK(monotone_neighbourhood_functor()->carrier(X) == upclosed_families_oracle(X));
  }
}

TEST_CASE("family view translation round-trips") {
  auto view = monotone_view(FiniteSet::atoms(2));
  for (std::size_t i = 0; i < view->carrier.size(); ++i) {
    const std::uint32_t family = view->family_of[i];
    CHECK(view->index_of(family, "test") == i);
    CHECK(view->family_of_value(view->carrier.at(i), "test") == family);
  }
  // {{a0}} is not up-closed over {a0,a1}: missing {a0,a1}.
  const std::uint32_t bad = 1u << view->inner->index_of(0b01);
  CHECK(view->index_of_family[bad] == -1);
  CHECK_THROWS_AS(view->index_of(bad, "test"), contract_error);
}

TEST_CASE("functor laws hold exhaustively on small sets") {
  struct Case {
    FunctorPtr F;
    std::size_t bound;
  };
  const Case cases[] = {
      {powerset_functor(), 3},  {neighbourhood_functor(), 2}, {monotone_neighbourhood_functor(), 2},
      {identity_functor(), 3},  {constant_functor(2), 2},
  };
  for (const auto& [F, bound] : cases) {
    CAPTURE(F->name());
    const auto universe = small_universe(bound);
    for (const auto& X : universe) {
      CHECK(F->map(Function::identity(X)) == Function::identity(F->carrier(X)));
    }
    for (const auto& X : universe) {
      for (const auto& Y : universe) {
        for (const auto& Z : universe) {
          for (const auto& f : all_functions(X, Y)) {
            for (const auto& g : all_functions(Y, Z)) {
              CHECK(F->map(g.after(f)) == F->map(g).after(F->map(f)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("neighbourhood action agrees with the inverse-image oracle") {
  const auto universe = small_universe(2);
  for (const auto& X : universe) {
    for (const auto& Y : universe) {
      for (const auto& f : all_functions(X, Y)) {
        const Function Nf = neighbourhood_functor()->map(f);
        for (const auto& U : Nf.source().values()) {
          CHECK(Nf.apply(U) == neighbourhood_action_oracle(f, U));
        }
      }
    }
  }
}

TEST_CASE("neighbourhood action of a constant map splits on full-set membership") {
  const FiniteSet X = FiniteSet::of({a(0), a(1)});
  const Function f = Function::constant(X, X, a(0));
  const Function Nf = neighbourhood_functor()->map(f);
  const Value full = X.as_value();
  const Value only_full = Value::set({full});
  const Value only_empty = Value::set({Value::empty_set()});
  CHECK(Nf.apply(only_full) == Value::set({Value::set({a(0)}), full}));
  CHECK(Nf.apply(only_empty) == Value::set({Value::empty_set(), Value::set({a(1)})}));
}

TEST_CASE("monotone action is the restricted neighbourhood action") {
  const auto universe = small_universe(2);
  const auto incl = inclusion_monotone_to_neighbourhood();
  for (const auto& X : universe) {
    for (const auto& Y : universe) {
      for (const auto& f : all_functions(X, Y)) {
        const Function via_m = incl->component(Y).after(monotone_neighbourhood_functor()->map(f));
        const Function via_n = neighbourhood_functor()->map(f).after(incl->component(X));
        CHECK(via_m == via_n);
      }
    }
  }
}

TEST_CASE("singleton transformation is natural") {
  const auto universe = small_universe(3);
  const auto eta = singleton_into_powerset();
  for (const auto& X : universe) {
    for (const auto& x : X.values()) {
      CHECK(eta->component(X).apply(x) == Value::set({x}));
    }
    for (const auto& Y : universe) {
      for (const auto& f : all_functions(X, Y)) {
        CHECK(powerset_functor()->map(f).after(eta->component(X)) ==
              eta->component(Y).after(f));
      }
    }
  }
}

TEST_CASE("powerset monad laws") {
  const PowersetMonad monad;
  const auto universe = small_universe(2);
  for (const auto& X : universe) {
    const FiniteSet PX = powerset(X);
    const Function unit = monad.unit(X);
    const Function mult = monad.mult(X);
    CHECK(mult.after(monad.unit(PX)) == Function::identity(PX));
    CHECK(mult.after(monad.functor->map(unit)) == Function::identity(PX));
    CHECK(mult.after(monad.functor->map(mult)) == mult.after(monad.mult(PX)));
    for (const auto& Y : universe) {
      for (const auto& f : all_functions(X, Y)) {
        const Function Pf = monad.functor->map(f);
        CHECK(Pf.after(unit) == monad.unit(Y).after(f));
        CHECK(Pf.after(mult) == monad.mult(Y).after(monad.functor->map(Pf)));
      }
    }
  }
}

TEST_CASE("mult takes unions") {
  const FiniteSet X = FiniteSet::of({a(0), a(1), a(2)});
  const Function mult = pow_mult(X);
  const Value u01 = Value::set({a(0), a(1)});
  const Value u2 = Value::set({a(2)});
  CHECK(mult.apply(Value::set({u01, u2})) == X.as_value());
  CHECK(mult.apply(Value::empty_set()) == Value::empty_set());
}

TEST_CASE("carrier cost formulas") {
  CHECK(powerset_functor()->carrier_cost(16) == 65536);
  CHECK(powerset_functor()->carrier_cost(17) == 131072);
  CHECK(!powerset_functor()->carrier_cost(63).has_value());
  CHECK(neighbourhood_functor()->carrier_cost(4) == 65536);
  CHECK(neighbourhood_functor()->carrier_cost(5) == (std::uint64_t{1} << 32));
  CHECK(!neighbourhood_functor()->carrier_cost(6).has_value());
  CHECK(monotone_neighbourhood_functor()->carrier_cost(4) == 65536);
  CHECK(identity_functor()->carrier_cost(100) == 100);
  CHECK(constant_functor(7)->carrier_cost(100) == 7);
}

TEST_CASE("family carriers beyond the limit raise resource errors") {
  const FiniteSet big = FiniteSet::atoms(5);
  CHECK_THROWS_AS(neighbourhood_functor()->carrier(big), resource_error);
  CHECK_THROWS_AS(monotone_neighbourhood_functor()->carrier(big), resource_error);
  try {
    neighbourhood_functor()->carrier(big);
  } catch (const resource_error& e) {
    CHECK(std::string(e.what()).find("65536") != std::string::npos);
  }
}

TEST_CASE("functor lookup by name") {
  CHECK(functor_by_name("P") == powerset_functor());
  CHECK(functor_by_name("N") == neighbourhood_functor());
  CHECK(functor_by_name("M") == monotone_neighbourhood_functor());
  CHECK(functor_by_name("Id") == identity_functor());
  CHECK(functor_by_name("Const(3)")->carrier(FiniteSet::atoms(1)) == FiniteSet::atoms(3));
  CHECK(functor_by_name("Const(0)")->name() == "Const(0)");
  CHECK_THROWS_AS(functor_by_name("Q"), contract_error);
  CHECK_THROWS_AS(functor_by_name("Const(x)"), contract_error);
  CHECK_THROWS_AS(functor_by_name("Const()"), contract_error);
}
