#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "relift/errors.hpp"
#include "relift/kleisli.hpp"
#include "relift/relation.hpp"

using namespace relift;

namespace {

Value a(std::uint64_t i) { return Value::atom(i); }

std::vector<FiniteSet> small_universe(std::size_t max_size) {
  // All subsets of {a0,a1,a2} up to the requested size, smallest first.
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

std::vector<Relation> all_rels(const FiniteSet& X, const FiniteSet& Y) {
  std::vector<Relation> out;
  const std::size_t bits = X.size() * Y.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    out.push_back(Relation::from_mask(X, Y, mask));
  }
  return out;
}

// Pair-chasing oracle for diagrammatic composition, independent of the
// bit-matrix implementation.
bool compose_oracle_holds(const Relation& R, const Relation& S, const Value& x, const Value& z) {
  for (const auto& [rx, ry] : R.pairs()) {
    if (rx != x) continue;
    for (const auto& [sy, sz] : S.pairs()) {
      if (sy == ry && sz == z) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("value ordering ranks atoms below pairs below sets") {
  const Value atom = a(3);
  const Value pr = Value::pair(a(0), a(1));
  const Value st = Value::set({a(0)});
  CHECK(atom < pr);
  CHECK(pr < st);
  CHECK(atom < st);
  CHECK(a(0) < a(1));
  CHECK(Value::pair(a(0), a(5)) < Value::pair(a(1), a(0)));
  CHECK(Value::pair(a(1), a(0)) < Value::pair(a(1), a(2)));
}

TEST_CASE("set values canonicalize: order and duplicates do not matter") {
  const Value s1 = Value::set({a(2), a(0), a(2), a(1)});
  const Value s2 = Value::set({a(0), a(1), a(2)});
  CHECK(s1 == s2);
  CHECK(s1.set_size() == 3);
  CHECK(Value::set({}) == Value::empty_set());
  CHECK(s1.set_contains(a(1)));
  CHECK_FALSE(s1.set_contains(a(3)));
}

TEST_CASE("set ordering is lexicographic on element lists") {
  const Value e = Value::empty_set();
  const Value s0 = Value::set({a(0)});
  const Value s01 = Value::set({a(0), a(1)});
  const Value s1 = Value::set({a(1)});
  CHECK(e < s0);
  CHECK(s0 < s01);   // prefix comes first
  CHECK(s01 < s1);   // a0 < a1 decides before length
}

TEST_CASE("canonical text encoding") {
  CHECK(a(12).text() == "a12");
  CHECK(Value::pair(a(0), Value::set({a(1)})).text() == "(a0,{a1})");
  CHECK(Value::empty_set().text() == "{}");
  CHECK(Value::set({Value::empty_set(), a(0)}).text() == "{a0,{}}");
  CHECK(Value::set({Value::set({a(1), a(0)})}).text() == "{{a0,a1}}");
}

TEST_CASE("powerset carrier is canonically sorted and complete") {
  const FiniteSet X = FiniteSet::atoms(3);
  const FiniteSet PX = powerset(X);
  REQUIRE(PX.size() == 8);
  for (std::size_t i = 0; i + 1 < PX.size(); ++i) CHECK(PX.at(i) < PX.at(i + 1));
  CHECK(PX.contains(Value::empty_set()));
  CHECK(PX.contains(X.as_value()));

  const FiniteSet none;
  const FiniteSet Pnone = powerset(none);
  REQUIRE(Pnone.size() == 1);
  CHECK(Pnone.at(0) == Value::empty_set());
}

TEST_CASE("subset mask order agrees with value order") {
  const FiniteSet X = FiniteSet::atoms(4);
  auto view = powerset_view(X);
  for (std::uint32_t m1 = 0; m1 < 16; ++m1) {
    for (std::uint32_t m2 = 0; m2 < 16; ++m2) {
      const Value v1 = view->carrier.at(view->index_of(m1));
      const Value v2 = view->carrier.at(view->index_of(m2));
      CHECK(subset_lex_less(m1, m2) == (v1 < v2));
    }
  }
}

TEST_CASE("powerset beyond the carrier limit raises a resource error") {
  CHECK_THROWS_AS(powerset(FiniteSet::atoms(17)), resource_error);
  try {
    powerset(FiniteSet::atoms(17));
  } catch (const resource_error& e) {
    CHECK(std::string(e.what()).find("65536") != std::string::npos);
  }
}

TEST_CASE("relation construction validates carriers") {
  const FiniteSet X = FiniteSet::atoms(2);
  const FiniteSet Y = FiniteSet::atoms(1);
  CHECK_THROWS_AS(Relation::from_pairs(X, Y, {{a(0), a(1)}}), contract_error);
  const Relation R = Relation::from_pairs(X, Y, {{a(1), a(0)}});
  CHECK(R.pair_count() == 1);
  CHECK(R.contains(a(1), a(0)));
  CHECK_FALSE(R.contains(a(0), a(0)));
}

TEST_CASE("composition agrees with the pair-chasing oracle") {
  const FiniteSet X = FiniteSet::atoms(2);
  const FiniteSet Y = FiniteSet::atoms(2);
  const FiniteSet Z = FiniteSet::atoms(2);
  for (const Relation& R : all_rels(X, Y)) {
    for (const Relation& S : all_rels(Y, Z)) {
      const Relation C = compose(R, S);
      for (std::size_t i = 0; i < X.size(); ++i) {
        for (std::size_t k = 0; k < Z.size(); ++k) {
          CHECK(C.contains(i, k) == compose_oracle_holds(R, S, X.at(i), Z.at(k)));
        }
      }
    }
  }
}

TEST_CASE("composition is associative with diagonal units") {
  const FiniteSet X = FiniteSet::atoms(2);
  const auto rels = all_rels(X, X);
  for (const Relation& R : rels) {
    CHECK(compose(diagonal(X), R) == R);
    CHECK(compose(R, diagonal(X)) == R);
    for (const Relation& S : rels) {
      for (const Relation& T : rels) {
        CHECK(compose(compose(R, S), T) == compose(R, compose(S, T)));
      }
    }
  }
}

TEST_CASE("converse is involutive and contravariant") {
  const FiniteSet X = FiniteSet::atoms(2);
  const FiniteSet Y = FiniteSet::atoms(2);
  for (const Relation& R : all_rels(X, Y)) {
    CHECK(converse(converse(R)) == R);
    for (const Relation& S : all_rels(Y, X)) {
      CHECK(converse(compose(R, S)) == compose(converse(S), converse(R)));
    }
  }
}

TEST_CASE("graphs compose functorially") {
  const FiniteSet X = FiniteSet::atoms(2);
  const FiniteSet Y = FiniteSet::atoms(3);
  const Function f = Function::from_indices(X, Y, {2, 0});
  const Function g = Function::from_indices(Y, X, {1, 1, 0});
  CHECK(graph(Function::identity(X)) == diagonal(X));
  CHECK(graph(g.after(f)) == compose(graph(f), graph(g)));
  // gr(f);gr_conv(f) contains the diagonal; gr_conv(f);gr(f) is contained in it.
  CHECK(diagonal(X).subset_of(compose(graph(f), converse(graph(f)))));
  CHECK(compose(converse(graph(f)), graph(f)).subset_of(diagonal(Y)));
}

TEST_CASE("membership relation pairs each subset with its elements") {
  const FiniteSet X = FiniteSet::atoms(2);
  const Relation mem = membership(X);
  CHECK(mem.source() == powerset(X));
  CHECK(mem.target() == X);
  CHECK(mem.pair_count() == 4);  // sum of |A| over subsets A
  CHECK(mem.contains(Value::set({a(0), a(1)}), a(0)));
  CHECK_FALSE(mem.contains(Value::empty_set(), a(0)));

  const Relation mem_empty = membership(FiniteSet());
  CHECK(mem_empty.source().size() == 1);
  CHECK(mem_empty.pair_count() == 0);
}

TEST_CASE("kleisli bridge is a bijection on the small universe") {
  const auto universe = small_universe(3);
  for (const FiniteSet& X : universe) {
    for (const FiniteSet& Y : universe) {
      if (X.size() * Y.size() > 9) continue;
      for (const Relation& R : all_rels(X, Y)) {
        const Function chi = to_kleisli(R);
        CHECK(from_kleisli(chi) == R);
        // gr(chi_R);membership = R
        CHECK(compose(graph(chi), membership(Y)) == R);
      }
    }
  }
}

TEST_CASE("kleisli bridge round-trips functions") {
  const FiniteSet X = FiniteSet::atoms(2);
  const FiniteSet Y = FiniteSet::atoms(2);
  const FiniteSet PY = powerset(Y);
  for (std::uint32_t i0 = 0; i0 < PY.size(); ++i0) {
    for (std::uint32_t i1 = 0; i1 < PY.size(); ++i1) {
      const Function f = Function::from_indices(X, PY, {i0, i1});
      CHECK(to_kleisli(from_kleisli(f)) == f);
    }
  }
}

TEST_CASE("from_kleisli rejects non-powerset targets") {
  const FiniteSet X = FiniteSet::atoms(1);
  const FiniteSet notP = FiniteSet::of({Value::empty_set(), Value::set({a(0), a(1)})});
  const Function f = Function::from_indices(X, notP, {0});
  CHECK_THROWS_AS(from_kleisli(f), contract_error);
}

TEST_CASE("flat transposes the kleisli encoding") {
  const FiniteSet X = FiniteSet::atoms(2);
  const FiniteSet Y = FiniteSet::atoms(2);
  for (const Relation& R : all_rels(X, Y)) {
    const Function f = to_kleisli(R);
    const Function fl = flat(f);
    CHECK(from_kleisli(fl) == converse(R));
    CHECK(flat(fl) == f);
  }
}

TEST_CASE("totalize completes and reconstructs") {
  const auto universe = small_universe(2);
  for (const FiniteSet& X : universe) {
    for (const FiniteSet& Y : universe) {
      if (X.size() > 2 || Y.size() > 2) continue;
      for (const Relation& R : all_rels(X, Y)) {
        const Totalization t = totalize(R);
        CHECK(t.completed.is_total());
        CHECK(t.completed.is_surjective());
        const Relation rebuilt =
            compose(graph(t.into_source), compose(t.completed, converse(graph(t.into_target))));
        CHECK(rebuilt == R);
      }
    }
  }
}

TEST_CASE("totalize keeps total surjective relations intact apart from the fresh loop") {
  const FiniteSet X = FiniteSet::atoms(2);
  const Relation R = Relation::from_pairs(X, X, {{a(0), a(1)}, {a(1), a(0)}});
  const Totalization t = totalize(R);
  CHECK(t.completed.pair_count() == R.pair_count() + 1);
  CHECK(t.completed.contains(totalization_point(), totalization_point()));
}

TEST_CASE("totalize rejects carriers holding the reserved point") {
  const FiniteSet X = FiniteSet::of({totalization_point()});
  CHECK_THROWS_AS(totalize(Relation::empty(X, X)), contract_error);
}
