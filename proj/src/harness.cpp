#include "relift/harness.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "relift/distlaw.hpp"
#include "relift/errors.hpp"
#include "relift/kleisli.hpp"
#include "relift/registry.hpp"

namespace relift {

namespace {

PropertyResult make_prop(std::string name) {
  PropertyResult p;
  p.name = std::move(name);
  return p;
}

// Keeps the first failure; later ones only bump the instance counter.
void fail(PropertyResult& p, const std::string& detail) {
  if (p.verdict == Verdict::fail) return;
  p.verdict = Verdict::fail;
  p.detail = detail;
}

std::vector<Relation> lift_tables(const LiftingPtr& L, const FiniteSet& X,
                                  const FiniteSet& Y) {
  const auto rels = all_relations(X, Y);
  std::vector<Relation> out;
  out.reserve(rels.size());
  for (const auto& R : rels) out.push_back(L->lift_of(R));
  return out;
}

std::string fn_text(const Function& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    if (i) os << ",";
    os << f.source().at(i).text() << "->" << f.target().at(f.apply_index(i)).text();
  }
  os << "]";
  return os.str();
}

std::string at_carriers(const FiniteSet& X, const FiniteSet& Y) {
  return "X=" + X.text() + ", Y=" + Y.text();
}

const char* first_core_failure(const AxiomReport& r) {
  static const LiftCondition core[] = {
      LiftCondition::monotonicity, LiftCondition::lax_functoriality,
      LiftCondition::graph_inequality, LiftCondition::converse_graph_inequality};
  for (const LiftCondition c : core)
    if (r.result(c).verdict == Verdict::fail) return condition_name(c);
  return "a required condition";
}

FiniteSet pair_carrier(const Relation& R) {
  std::vector<Value> ps;
  for (const auto& [x, y] : R.pairs()) ps.push_back(Value::pair(x, y));
  return FiniteSet::of(std::move(ps));
}

// ---------------------------------------------------------------------------
// lattice: meets of arbitrary nonempty subsets of the registered powerset
// family stay within the required conditions and are the pointwise glbs.

SuiteReport run_lattice(std::size_t bound) {
  SuiteReport rep;
  rep.suite = "lattice";
  rep.bound = bound;

  std::vector<LiftingPtr> family;
  for (const auto& e : lifting_registry("P"))
    if (!e.informational) family.push_back(e.lifting);
  const auto universe = axiom_universe(bound);

  std::vector<LiftingPtr> meets;
  std::vector<std::uint32_t> members;
  for (std::uint32_t s = 1; s < (1u << family.size()); ++s) {
    std::vector<LiftingPtr> parts;
    for (std::size_t i = 0; i < family.size(); ++i)
      if (s >> i & 1u) parts.push_back(family[i]);
    meets.push_back(meet_lift(std::move(parts)));
    members.push_back(s);
  }

  PropertyResult core = make_prop("meet-satisfies-required-conditions");
  for (const auto& meet : meets) {
    const AxiomReport r = check_lifting_axioms(meet, bound);
    core.instances_checked += r.instances_checked;
    if (!r.core_pass())
      fail(core, meet->name() + " violates " + first_core_failure(r));
  }

  PropertyResult glb = make_prop("meet-is-pointwise-glb");
  for (const auto& X : universe) {
    for (const auto& Y : universe) {
      const auto rels = all_relations(X, Y);
      std::vector<std::vector<Relation>> part_tables;
      part_tables.reserve(family.size());
      for (const auto& L : family) part_tables.push_back(lift_tables(L, X, Y));
      for (std::size_t k = 0; k < meets.size(); ++k) {
        for (std::size_t m = 0; m < rels.size(); ++m) {
          ++glb.instances_checked;
          const Relation got = meets[k]->lift_of(rels[m]);
          Relation expect;
          bool first = true;
          for (std::size_t i = 0; i < family.size(); ++i) {
            if (!(members[k] >> i & 1u)) continue;
            if (!got.subset_of(part_tables[i][m]))
              fail(glb, meets[k]->name() + " is not below " + family[i]->name() +
                            " at " + at_carriers(X, Y) + ", R=" + rels[m].text());
            expect = first ? part_tables[i][m] : expect.intersect(part_tables[i][m]);
            first = false;
          }
          if (got != expect)
            fail(glb, meets[k]->name() + " differs from the pointwise intersection at " +
                          at_carriers(X, Y) + ", R=" + rels[m].text());
        }
      }
    }
  }

  rep.properties.push_back(std::move(core));
  rep.properties.push_back(std::move(glb));
  return rep;
}

// ---------------------------------------------------------------------------
// cospan: L(gr(f);R;gr_conv(g)) = gr(Ff);LR;gr_conv(Fg) for every registered
// lifting that meets the required conditions at the sweep bound.

SuiteReport run_cospan(std::size_t bound) {
  SuiteReport rep;
  rep.suite = "cospan";
  rep.bound = bound;

  for (const auto& fname : registry_functor_names()) {
    const std::size_t b =
        fname == "P" ? std::min<std::size_t>(bound + 1, 3) : bound;
    const auto universe = axiom_universe(b);
    for (const auto& entry : lifting_registry(fname)) {
      const LiftingPtr& L = entry.lifting;
      PropertyResult prop = make_prop(fname + ":" + L->name());

      const AxiomReport gate = check_lifting_axioms(L, b);
      if (!gate.core_pass()) {
        prop.verdict = Verdict::skipped;
        prop.detail = "required conditions fail at bound " + std::to_string(b) +
                      "; the identity is not claimed for this lifting";
        rep.properties.push_back(std::move(prop));
        continue;
      }

      const FunctorPtr& F = L->functor();
      std::map<std::pair<Value, Value>, std::vector<Relation>> cache;
      const auto tables_at = [&](const FiniteSet& A,
                                 const FiniteSet& B) -> const std::vector<Relation>& {
        const auto key = std::make_pair(A.as_value(), B.as_value());
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, lift_tables(L, A, B)).first;
        return it->second;
      };

      for (const auto& X : universe) {
        for (const auto& Y : universe) {
          const auto& lifted = tables_at(X, Y);
          const std::size_t ny = Y.size();
          for (const auto& Xp : universe) {
            for (const Function& f : all_functions(Xp, X)) {
              const Function Ff = F->map(f);
              const std::size_t fn = Ff.source().size();
              std::vector<std::size_t> fidx(fn);
              for (std::size_t u = 0; u < fn; ++u) fidx[u] = Ff.apply_index(u);
              for (const auto& Yp : universe) {
                const auto& composite_tables = tables_at(Xp, Yp);
                for (const Function& g : all_functions(Yp, Y)) {
                  const Function Fg = F->map(g);
                  const std::size_t gn = Fg.source().size();
                  std::vector<std::size_t> gidx(gn);
                  for (std::size_t v = 0; v < gn; ++v) gidx[v] = Fg.apply_index(v);
                  std::vector<std::size_t> bit;
                  bit.reserve(Xp.size() * Yp.size());
                  for (std::size_t i = 0; i < Xp.size(); ++i)
                    for (std::size_t j = 0; j < Yp.size(); ++j)
                      bit.push_back(f.apply_index(i) * ny + g.apply_index(j));
                  for (std::size_t m = 0; m < lifted.size(); ++m) {
                    ++prop.instances_checked;
                    std::uint64_t m2 = 0;
                    for (std::size_t k = 0; k < bit.size(); ++k)
                      if (m >> bit[k] & 1u) m2 |= 1ull << k;
                    const Relation& lhs = composite_tables[m2];
                    const Relation& mid = lifted[m];
                    bool equal = true;
                    for (std::size_t u = 0; equal && u < fn; ++u)
                      for (std::size_t v = 0; v < gn; ++v)
                        if (lhs.contains(u, v) != mid.contains(fidx[u], gidx[v])) {
                          equal = false;
                          break;
                        }
                    if (!equal)
                      fail(prop, "at " + at_carriers(X, Y) + ", X'=" + Xp.text() +
                                     ", Y'=" + Yp.text() + ", f=" + fn_text(f) +
                                     ", g=" + fn_text(g) +
                                     ", R mask " + std::to_string(m));
                  }
                }
              }
            }
          }
        }
      }
      rep.properties.push_back(std::move(prop));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// barr-minimal: the span lifting sits below every registered powerset
// lifting, relation by relation.

SuiteReport run_barr_minimal(std::size_t bound) {
  SuiteReport rep;
  rep.suite = "barr-minimal";
  rep.bound = bound;

  const LiftingPtr barr = barr_lift(powerset_functor());
  const auto entries = lifting_registry("P");
  const auto universe = axiom_universe(bound);

  std::vector<PropertyResult> props;
  props.reserve(entries.size());
  for (const auto& e : entries) props.push_back(make_prop("span-below-" + e.lifting->name()));

  for (const auto& X : universe) {
    for (const auto& Y : universe) {
      const auto base = lift_tables(barr, X, Y);
      for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto upper = lift_tables(entries[k].lifting, X, Y);
        for (std::size_t m = 0; m < base.size(); ++m) {
          ++props[k].instances_checked;
          if (!base[m].subset_of(upper[m]))
            fail(props[k], "not below " + entries[k].lifting->name() + " at " +
                               at_carriers(X, Y) + ", R mask " + std::to_string(m));
        }
      }
    }
  }
  rep.properties = std::move(props);
  return rep;
}

// ---------------------------------------------------------------------------
// mtilde-minimal: the forth/back lifting passes the required conditions plus
// symmetry, reconstructs its witnesses, is least among the registered
// monotone liftings, and factors through totalization.

SuiteReport run_mtilde_minimal(std::size_t bound) {
  SuiteReport rep;
  rep.suite = "mtilde-minimal";
  rep.bound = bound;

  const FunctorPtr M = monotone_neighbourhood_functor();
  const LiftingPtr mt = mtilde_lift();
  const auto entries = lifting_registry("M");
  const auto universe = axiom_universe(bound);

  PropertyResult axioms = make_prop("forth-back-core-and-converse");
  {
    const AxiomReport r = check_lifting_axioms(mt, bound);
    axioms.instances_checked = r.instances_checked;
    static const LiftCondition wanted[] = {
        LiftCondition::monotonicity, LiftCondition::lax_functoriality,
        LiftCondition::graph_inequality, LiftCondition::converse_graph_inequality,
        LiftCondition::symmetry};
    for (const LiftCondition c : wanted)
      if (r.result(c).verdict != Verdict::pass)
        fail(axioms, std::string(condition_name(c)) + " does not hold at bound " +
                         std::to_string(bound));
  }

  PropertyResult witness = make_prop("witness-reconstruction");
  PropertyResult minimal = make_prop("pointwise-minimal-among-registered");
  PropertyResult factor = make_prop("totalization-factorization");

  for (const auto& X : universe) {
    for (const auto& Y : universe) {
      const auto rels = all_relations(X, Y);
      const auto mt_tables = lift_tables(mt, X, Y);

      for (std::size_t m = 0; m < rels.size(); ++m) {
        const Relation& R = rels[m];
        if (!R.is_total() || !R.is_surjective()) continue;
        const FiniteSet pairs = pair_carrier(R);
        const FiniteSet MP = M->carrier(pairs);
        const Function p1 = Function::from_map(pairs, X, [](const Value& p) { return p.first(); });
        const Function p2 = Function::from_map(pairs, Y, [](const Value& p) { return p.second(); });
        const Function Mp1 = M->map(p1);
        const Function Mp2 = M->map(p2);
        for (const auto& [U, V] : mt_tables[m].pairs()) {
          ++witness.instances_checked;
          const Value W = mtilde_witness(R, U, V);
          if (!MP.contains(W)) {
            fail(witness, "witness outside the up-closed carrier at " + at_carriers(X, Y) +
                              ", R=" + R.text() + ", U=" + U.text() + ", V=" + V.text());
            continue;
          }
          if (Mp1.apply(W) != U || Mp2.apply(W) != V)
            fail(witness, "projections do not recover the pair at " + at_carriers(X, Y) +
                              ", R=" + R.text() + ", U=" + U.text() + ", V=" + V.text() +
                              ", W=" + W.text());
        }
      }

      std::vector<Totalization> totals;
      totals.reserve(rels.size());
      for (const auto& R : rels) totals.push_back(totalize(R));
      std::vector<Relation> star_left, star_right;
      star_left.reserve(rels.size());
      star_right.reserve(rels.size());
      for (const auto& t : totals) {
        star_left.push_back(graph(M->map(t.into_source)));
        star_right.push_back(converse(graph(M->map(t.into_target))));
      }

      for (const auto& entry : entries) {
        const LiftingPtr& L = entry.lifting;
        const auto tables = lift_tables(L, X, Y);
        for (std::size_t m = 0; m < rels.size(); ++m) {
          ++minimal.instances_checked;
          if (!mt_tables[m].subset_of(tables[m]))
            fail(minimal, "not below " + L->name() + " at " + at_carriers(X, Y) +
                              ", R=" + rels[m].text());
          ++factor.instances_checked;
          const Relation through =
              compose(compose(star_left[m], L->lift_of(totals[m].completed)), star_right[m]);
          if (tables[m] != through)
            fail(factor, L->name() + " does not factor through totalization at " +
                             at_carriers(X, Y) + ", R=" + rels[m].text());
        }
      }
    }
  }

  rep.properties.push_back(std::move(axioms));
  rep.properties.push_back(std::move(witness));
  rep.properties.push_back(std::move(minimal));
  rep.properties.push_back(std::move(factor));
  return rep;
}

// ---------------------------------------------------------------------------
// lj-classification: the sixteen guard liftings are distinct, ordered by
// reverse inclusion of their formula sets, bounded below by the full-formula
// lifting, and obey the computed constant-map case table.  The two-pair
// exchange sweep is split per side; the source side is expected to fail and
// its first counterexample is kept.

SuiteReport run_lj_classification(std::size_t bound) {
  SuiteReport rep;
  rep.suite = "lj-classification";
  rep.bound = bound;

  const FunctorPtr N = neighbourhood_functor();
  const auto universe = axiom_universe(bound);
  std::vector<LiftingPtr> lj(16);
  for (unsigned j = 0; j < 16; ++j) lj[j] = lj_lift(j);
  const LiftingPtr& bottom = lj[15];

  PropertyResult distinct = make_prop("sixteen-pairwise-distinct");
  {
    const FiniteSet X1 = FiniteSet::of({Value::atom(0)});
    std::vector<std::vector<Relation>> t(16);
    for (unsigned j = 0; j < 16; ++j) t[j] = lift_tables(lj[j], X1, X1);
    for (unsigned i = 0; i < 16; ++i)
      for (unsigned j = i + 1; j < 16; ++j) {
        ++distinct.instances_checked;
        if (t[i] == t[j])
          fail(distinct, lj[i]->name() + " equals " + lj[j]->name() +
                             " on one-point carriers");
      }
  }

  PropertyResult order = make_prop("reindexing-matches-pointwise-order");
  {
    bool le[16][16];
    for (auto& row : le) std::fill(std::begin(row), std::end(row), true);
    for (const auto& X : universe) {
      for (const auto& Y : universe) {
        std::vector<std::vector<Relation>> t(16);
        for (unsigned j = 0; j < 16; ++j) t[j] = lift_tables(lj[j], X, Y);
        for (std::size_t m = 0; m < t[0].size(); ++m)
          for (unsigned i = 0; i < 16; ++i)
            for (unsigned j = 0; j < 16; ++j) {
              ++order.instances_checked;
              le[i][j] = le[i][j] && t[i][m].subset_of(t[j][m]);
            }
      }
    }
    for (unsigned i = 0; i < 16; ++i)
      for (unsigned j = 0; j < 16; ++j) {
        const bool includes = (i & j) == j;
        if (le[i][j] != includes)
          fail(order, lj[i]->name() + " vs " + lj[j]->name() + ": formula sets " +
                          (includes ? "include" : "do not include") +
                          " but tables are " + (le[i][j] ? "" : "not ") + "ordered");
      }
  }

  const auto entries = lifting_registry("N");
  PropertyResult min_all = make_prop("bottom-guard-least-among-registered");
  PropertyResult min_sym = make_prop("bottom-guard-least-among-symmetric");
  {
    std::vector<char> symmetric(entries.size(), 1);
    for (const auto& X : universe) {
      for (const auto& Y : universe) {
        const auto bt = lift_tables(bottom, X, Y);
        for (std::size_t k = 0; k < entries.size(); ++k) {
          if (entries[k].informational) continue;
          const auto et = lift_tables(entries[k].lifting, X, Y);
          const auto tw = lift_tables(twiddle_lift(entries[k].lifting), X, Y);
          for (std::size_t m = 0; m < bt.size(); ++m) {
            if (et[m] != tw[m]) symmetric[k] = 0;
            ++min_all.instances_checked;
            if (!bt[m].subset_of(et[m]))
              fail(min_all, "not below " + entries[k].lifting->name() + " at " +
                                at_carriers(X, Y) + ", R mask " + std::to_string(m));
          }
        }
      }
    }

    std::string sym_names;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (entries[k].informational || !symmetric[k]) continue;
      if (!sym_names.empty()) sym_names += ", ";
      sym_names += entries[k].lifting->name();
      for (const auto& X : universe) {
        for (const auto& Y : universe) {
          const auto bt = lift_tables(bottom, X, Y);
          const auto et = lift_tables(entries[k].lifting, X, Y);
          for (std::size_t m = 0; m < bt.size(); ++m) {
            ++min_sym.instances_checked;
            if (!bt[m].subset_of(et[m]))
              fail(min_sym, "not below " + entries[k].lifting->name() + " at " +
                                at_carriers(X, Y) + ", R mask " + std::to_string(m));
          }
        }
      }
    }
    if (min_sym.verdict == Verdict::pass)
      min_sym.detail = "symmetric registered family at this bound: " + sym_names;

    // The span entry is informational; record where it leaves the order.
    for (const auto& entry : entries) {
      if (!entry.informational || min_all.verdict != Verdict::pass) continue;
      bool noted = false;
      for (const auto& X : universe) {
        for (const auto& Y : universe) {
          if (noted) break;
          const auto bt = lift_tables(bottom, X, Y);
          const auto st = lift_tables(entry.lifting, X, Y);
          for (std::size_t m = 0; m < bt.size() && !noted; ++m) {
            if (bt[m].subset_of(st[m])) continue;
            for (const auto& [u, v] : bt[m].pairs()) {
              if (st[m].contains(u, v)) continue;
              min_all.detail = entry.lifting->name() +
                               " is informational and excluded; it does not dominate the "
                               "bottom guard: at " +
                               at_carriers(X, Y) + ", R mask " + std::to_string(m) +
                               ", pair (" + u.text() + ", " + v.text() + ")";
              noted = true;
              break;
            }
          }
        }
        if (noted) break;
      }
    }
  }

  // Constant maps into a two-point codomain, keyed by the two polarity bits.
  const Value va = Value::atom(20);
  const Value vb = Value::atom(21);
  const FiniteSet two = FiniteSet::of({va, vb});
  const Value fam_empty = Value::set({});
  const Value fam_low_a = Value::set({Value::empty_set(), Value::set({vb})});
  const Value fam_high_a = Value::set({Value::set({va}), two.as_value()});
  const Value fam_low_b = Value::set({Value::empty_set(), Value::set({va})});
  const Value fam_high_b = Value::set({Value::set({vb}), two.as_value()});
  const Value fam_full = powerset(two).as_value();

  PropertyResult table = make_prop("constant-map-preimage-table");
  for (const auto& X : universe) {
    if (X.empty()) continue;
    const FiniteSet NX = N->carrier(X);
    const Function Na = N->map(Function::constant(X, two, va));
    const Function Nb = N->map(Function::constant(X, two, vb));
    const Value whole = X.as_value();
    for (std::size_t i = 0; i < NX.size(); ++i) {
      const Value& U = NX.at(i);
      const bool has_bot = U.set_contains(Value::empty_set());
      const bool has_top = U.set_contains(whole);
      const Value expect_a = has_bot ? (has_top ? fam_full : fam_low_a)
                                     : (has_top ? fam_high_a : fam_empty);
      const Value expect_b = has_bot ? (has_top ? fam_full : fam_low_b)
                                     : (has_top ? fam_high_b : fam_empty);
      ++table.instances_checked;
      if (Na.apply(U) != expect_a || Nb.apply(U) != expect_b)
        fail(table, "constant-map image of " + U.text() + " over X=" + X.text() +
                        " is " + Na.apply(U).text() + " / " + Nb.apply(U).text());
    }
  }
  if (table.verdict == Verdict::pass)
    table.detail =
        "cases keyed by (empty set in U, full set in U); the mixed case holding only "
        "the empty set maps to {0,{other}}, the one holding only the full set to "
        "{{value},2}";

  PropertyResult zig = make_prop("constant-zigzag-identities");
  for (const auto& X : universe) {
    if (X.empty()) continue;
    const Value x0 = X.at(0);
    const Function ca = Function::constant(X, two, va);
    const Function cb = Function::constant(X, two, vb);
    const Function cx0 = Function::constant(X, X, x0);
    const Function f =
        Function::from_map(X, two, [&](const Value& x) { return x == x0 ? va : vb; });
    const Relation hook = compose(graph(ca), converse(graph(f)));
    ++zig.instances_checked;
    if (hook != graph(cx0))
      fail(zig, "gr(a);gr_conv(f) is not the constant-" + x0.text() + " graph over X=" +
                    X.text());
    ++zig.instances_checked;
    if (compose(hook, graph(ca)) != graph(ca))
      fail(zig, "the zigzag does not reproduce the first constant graph over X=" + X.text());
    ++zig.instances_checked;
    if (compose(hook, graph(cb)) != graph(cb))
      fail(zig, "the zigzag does not reproduce the second constant graph over X=" + X.text());

    const Function Nf = N->map(f);
    std::vector<Value> rest;
    for (std::size_t i = 1; i < X.size(); ++i) rest.push_back(X.at(i));
    const Value V = Value::set({Value::empty_set(), Value::set(rest)});
    const Value V2 = Value::set({Value::set({x0}), X.as_value()});
    ++zig.instances_checked;
    if (Nf.apply(V) != fam_low_a)
      fail(zig, "peeled family image over X=" + X.text() + " is " + Nf.apply(V).text());
    ++zig.instances_checked;
    if (Nf.apply(V2) != fam_high_a)
      fail(zig, "pointed family image over X=" + X.text() + " is " + Nf.apply(V2).text());
  }

  // Two-pair exchange, each conclusion side separately.
  PropertyResult target_side = make_prop("two-pair-exchange-target-side");
  PropertyResult source_side = make_prop("two-pair-exchange-source-side");
  {
    const std::size_t n = universe.size();
    std::vector<std::vector<Relation>> bottom_tab(n, std::vector<Relation>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        bottom_tab[a][b] = bottom->lift_of(Relation::empty(universe[a], universe[b]));

    for (unsigned r = 0; r < 4; ++r) {
      const LiftingPtr& clause = lj[1u << r];
      const std::string rho = RhoFormula::from_index(r).text();
      struct FailSet {
        std::size_t x, y;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
      };
      std::vector<FailSet> failing;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const Relation tab = clause->lift_of(Relation::empty(universe[a], universe[b]));
          FailSet fs{a, b, {}};
          for (std::size_t i = 0; i < tab.source().size(); ++i)
            for (std::size_t j = 0; j < tab.target().size(); ++j)
              if (!tab.contains(i, j)) fs.pairs.emplace_back(i, j);
          if (!fs.pairs.empty()) failing.push_back(std::move(fs));
        }
      }
      for (const auto& one : failing) {
        for (const auto& other : failing) {
          const Relation& sources = bottom_tab[one.x][other.x];
          const Relation& targets = bottom_tab[one.y][other.y];
          for (const auto& [u, v] : one.pairs) {
            for (const auto& [u2, v2] : other.pairs) {
              ++target_side.instances_checked;
              if (!targets.contains(v, v2))
                fail(target_side,
                     "rho=" + rho + ": V=" + targets.source().at(v).text() + " over Y=" +
                         universe[one.y].text() + " and V'=" + targets.target().at(v2).text() +
                         " over Y'=" + universe[other.y].text() +
                         " do not satisfy every formula");
              ++source_side.instances_checked;
              if (!sources.contains(u, u2))
                fail(source_side,
                     "rho=" + rho + ": U=" + sources.source().at(u).text() + " over X=" +
                         universe[one.x].text() + " and U'=" + sources.target().at(u2).text() +
                         " over X'=" + universe[other.x].text() +
                         " do not satisfy every formula");
            }
          }
        }
      }
    }
  }

  rep.properties.push_back(std::move(distinct));
  rep.properties.push_back(std::move(order));
  rep.properties.push_back(std::move(min_all));
  rep.properties.push_back(std::move(min_sym));
  rep.properties.push_back(std::move(table));
  rep.properties.push_back(std::move(zig));
  rep.properties.push_back(std::move(target_side));
  rep.properties.push_back(std::move(source_side));
  return rep;
}

// ---------------------------------------------------------------------------
// distlaw-bijection: lifting -> law -> lifting and law -> lifting -> law are
// identities on the checked families, and the optional lifting conditions
// line up with the optional law conditions.

SuiteReport run_distlaw_bijection(std::size_t bound) {
  SuiteReport rep;
  rep.suite = "distlaw-bijection";
  rep.bound = bound;

  struct Group {
    std::vector<LiftingPtr> liftings;
    std::size_t b;
  };
  std::vector<Group> groups;
  {
    Group p{{}, bound};
    for (const auto& e : lifting_registry("P"))
      if (!e.informational) p.liftings.push_back(e.lifting);
    Group m{{}, bound};
    for (const auto& e : lifting_registry("M"))
      if (!e.informational) m.liftings.push_back(e.lifting);
    Group g{{}, bound >= 2 ? bound - 1 : bound};
    for (unsigned j = 0; j < 16; ++j) g.liftings.push_back(lj_lift(j));
    groups.push_back(std::move(p));
    groups.push_back(std::move(m));
    groups.push_back(std::move(g));
  }

  PropertyResult lift_rt = make_prop("lifting-round-trip");
  PropertyResult law_rt = make_prop("law-round-trip");
  PropertyResult diag = make_prop("diagonal-matches-extensionality");
  PropertyResult conv = make_prop("converse-matches-symmetry");

  for (const auto& G : groups) {
    const auto universe = axiom_universe(G.b);
    for (const LiftingPtr& L : G.liftings) {
      const DistLawPtr law = law_from_lifting(L);
      const LiftingPtr back = lifting_from_law(law);
      for (const auto& X : universe) {
        for (const auto& Y : universe) {
          const auto rels = all_relations(X, Y);
          for (const auto& R : rels) {
            ++lift_rt.instances_checked;
            if (L->lift_of(R) != back->lift_of(R))
              fail(lift_rt, L->name() + " round trip differs at " + at_carriers(X, Y) +
                                ", R=" + R.text());
          }
        }
      }

      const DistLawPtr law2 = law_from_lifting(back);
      for (const auto& X : universe) {
        ++law_rt.instances_checked;
        if (law->component_of(X) != law2->component_of(X))
          fail(law_rt, law->name() + " round trip differs at X=" + X.text());
      }

      const AxiomReport ar = check_lifting_axioms(L, G.b);
      const LawReport lr = check_distlaw_axioms(law, G.b);
      const auto align = [&](PropertyResult& p, const ConditionResult& lift_side,
                             const LawConditionResult& law_side, const char* what) {
        if (lift_side.verdict == Verdict::skipped || law_side.verdict == Verdict::skipped) {
          ++p.instances_skipped;
          return;
        }
        ++p.instances_checked;
        if (lift_side.verdict != law_side.verdict)
          fail(p, L->name() + ": " + what + " disagree (" +
                      verdict_name(lift_side.verdict) + " vs " +
                      verdict_name(law_side.verdict) + ")");
      };
      align(diag, ar.diagonal_preservation, lr.lax_extensionality,
            "diagonal preservation and lax extensionality");
      align(conv, ar.symmetry, lr.symmetry, "converse preservation and symmetry");
    }
  }

  rep.properties.push_back(std::move(lift_rt));
  rep.properties.push_back(std::move(law_rt));
  rep.properties.push_back(std::move(diag));
  rep.properties.push_back(std::move(conv));
  return rep;
}

// ---------------------------------------------------------------------------
// transport: pulling back along the inclusion of up-closed families keeps
// the required conditions and commutes with meet, twiddle, symmetry, and
// (the inclusion being injective) diagonal preservation.

SuiteReport run_transport(std::size_t bound) {
  SuiteReport rep;
  rep.suite = "transport";
  rep.bound = bound;

  const NatTransPtr iota = inclusion_monotone_to_neighbourhood();
  const FunctorPtr M = iota->source();
  const FunctorPtr N = iota->target();
  const auto universe = axiom_universe(bound);

  std::vector<LiftingPtr> lj(16);
  for (unsigned j = 0; j < 16; ++j) lj[j] = lj_lift(j);

  PropertyResult inj = make_prop("inclusion-components-injective");
  for (const auto& X : universe) {
    ++inj.instances_checked;
    const Function c = iota->component(X);
    for (std::size_t i = 0; i < c.source().size() && inj.verdict == Verdict::pass; ++i)
      for (std::size_t j = i + 1; j < c.source().size(); ++j)
        if (c.apply_index(i) == c.apply_index(j)) {
          fail(inj, "component at X=" + X.text() + " identifies " +
                        c.source().at(i).text() + " and " + c.source().at(j).text());
          break;
        }
  }

  PropertyResult guards = make_prop("transported-guards-satisfy-core");
  for (unsigned j = 0; j < 16; ++j) {
    const AxiomReport r = check_lifting_axioms(transport_lift(iota, lj[j]), bound);
    guards.instances_checked += r.instances_checked;
    if (!r.core_pass())
      fail(guards, "transport of " + lj[j]->name() + " violates " + first_core_failure(r));
  }

  PropertyResult meets = make_prop("preserves-binary-meets");
  for (unsigned i = 0; i < 16; ++i) {
    for (unsigned j = i; j < 16; ++j) {
      const LiftingPtr lhs = transport_lift(iota, meet_lift({lj[i], lj[j]}));
      const LiftingPtr rhs =
          meet_lift({transport_lift(iota, lj[i]), transport_lift(iota, lj[j])});
      for (const auto& X : universe) {
        for (const auto& Y : universe) {
          const auto lt = lift_tables(lhs, X, Y);
          const auto rt = lift_tables(rhs, X, Y);
          for (std::size_t m = 0; m < lt.size(); ++m) {
            ++meets.instances_checked;
            if (lt[m] != rt[m])
              fail(meets, "meet of " + lj[i]->name() + ", " + lj[j]->name() +
                              " does not commute at " + at_carriers(X, Y) + ", R mask " +
                              std::to_string(m));
          }
        }
      }
    }
  }

  PropertyResult twid = make_prop("preserves-twiddle");
  for (unsigned j = 0; j < 16; ++j) {
    const LiftingPtr lhs = transport_lift(iota, twiddle_lift(lj[j]));
    const LiftingPtr rhs = twiddle_lift(transport_lift(iota, lj[j]));
    for (const auto& X : universe) {
      for (const auto& Y : universe) {
        const auto lt = lift_tables(lhs, X, Y);
        const auto rt = lift_tables(rhs, X, Y);
        for (std::size_t m = 0; m < lt.size(); ++m) {
          ++twid.instances_checked;
          if (lt[m] != rt[m])
            fail(twid, lj[j]->name() + " twiddle does not commute at " + at_carriers(X, Y) +
                           ", R mask " + std::to_string(m));
        }
      }
    }
  }

  const auto n_entries = lifting_registry("N");
  PropertyResult symm = make_prop("preserves-symmetry");
  PropertyResult diag = make_prop("preserves-diagonal-preservation");
  for (const auto& entry : n_entries) {
    if (entry.informational) continue;
    const LiftingPtr& L = entry.lifting;
    const LiftingPtr t = transport_lift(iota, L);

    bool l_symmetric = true;
    const LiftingPtr tw = twiddle_lift(L);
    for (const auto& X : universe) {
      for (const auto& Y : universe) {
        const auto a = lift_tables(L, X, Y);
        const auto b = lift_tables(tw, X, Y);
        for (std::size_t m = 0; m < a.size(); ++m)
          if (a[m] != b[m]) l_symmetric = false;
      }
    }
    if (l_symmetric) {
      ++symm.instances_checked;
      const LiftingPtr ttw = twiddle_lift(t);
      for (const auto& X : universe) {
        for (const auto& Y : universe) {
          const auto a = lift_tables(t, X, Y);
          const auto b = lift_tables(ttw, X, Y);
          for (std::size_t m = 0; m < a.size(); ++m)
            if (a[m] != b[m])
              fail(symm, "transport of the symmetric " + L->name() +
                             " is not symmetric at " + at_carriers(X, Y) + ", R mask " +
                             std::to_string(m));
        }
      }
    }

    for (const auto& X : universe) {
      ++diag.instances_checked;
      const bool upstairs =
          L->lift_of(diagonal(X)).subset_of(diagonal(N->carrier(X)));
      if (!upstairs) continue;
      if (!t->lift_of(diagonal(X)).subset_of(diagonal(M->carrier(X))))
        fail(diag, "transport of " + L->name() +
                       " stops preserving the diagonal at X=" + X.text());
    }
  }
  if (symm.verdict == Verdict::pass && symm.instances_checked == 0)
    symm.detail = "no symmetric registered lifting at this bound";

  rep.properties.push_back(std::move(inj));
  rep.properties.push_back(std::move(guards));
  rep.properties.push_back(std::move(meets));
  rep.properties.push_back(std::move(twid));
  rep.properties.push_back(std::move(symm));
  rep.properties.push_back(std::move(diag));
  return rep;
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const auto& p : properties)
    if (p.verdict == Verdict::fail) return false;
  return true;
}

const PropertyResult* SuiteReport::find(const std::string& name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

const std::vector<std::string>& theorem_suites() {
  static const std::vector<std::string> names = {
      "lattice",        "cospan",            "barr-minimal",
      "mtilde-minimal", "lj-classification", "distlaw-bijection",
      "transport"};
  return names;
}

SuiteReport run_suite(const std::string& suite, std::size_t bound) {
  if (suite == "lattice") return run_lattice(bound ? bound : 2);
  if (suite == "cospan") return run_cospan(bound ? bound : 2);
  if (suite == "barr-minimal") return run_barr_minimal(bound ? bound : 3);
  if (suite == "mtilde-minimal") return run_mtilde_minimal(bound ? bound : 2);
  if (suite == "lj-classification") return run_lj_classification(bound ? bound : 2);
  if (suite == "distlaw-bijection") return run_distlaw_bijection(bound ? bound : 2);
  if (suite == "transport") return run_transport(bound ? bound : 2);
  throw contract_error("unknown theorem suite '" + suite + "'");
}

std::vector<SuiteReport> run_all_suites(std::size_t bound) {
  std::vector<SuiteReport> out;
  out.reserve(theorem_suites().size());
  for (const auto& name : theorem_suites()) out.push_back(run_suite(name, bound));
  return out;
}

}  // namespace relift
