#include "relift/bisim.hpp"

#include <utility>
#include <vector>

#include "relift/errors.hpp"

namespace relift {

namespace {

void require_compatible(const LiftingPtr& L, const Coalgebra& c, const Coalgebra& d) {
  if (!L) throw contract_error("bisim: null lifting");
  if (L->functor()->name() != c.functor()->name() ||
      c.functor()->name() != d.functor()->name()) {
    throw contract_error("bisim: lifting and coalgebras disagree on the functor");
  }
}

}  // namespace

Coalgebra::Coalgebra(FunctorPtr functor, FiniteSet states, Function structure)
    : functor_(std::move(functor)), states_(std::move(states)), structure_(std::move(structure)) {
  if (!functor_) throw contract_error("coalgebra: null functor");
  if (!(structure_.source() == states_)) {
    throw contract_error("coalgebra: structure domain is not the state space");
  }
  if (!(structure_.target() == functor_->carrier(states_))) {
    throw contract_error("coalgebra: structure codomain is not " + functor_->name() +
                         "(states)");
  }
}

Relation refine_step(const LiftingPtr& L, const Coalgebra& c, const Coalgebra& d,
                     const Relation& R) {
  require_compatible(L, c, d);
  if (!(R.source() == c.states()) || !(R.target() == d.states())) {
    throw contract_error("refine_step: relation is not between the two state spaces");
  }
  const Relation lifted = L->lift_of(R);
  const Function& cs = c.structure();
  const Function& ds = d.structure();
  return Relation::build(c.states(), d.states(), [&](std::size_t i, std::size_t j) {
    return lifted.contains(cs.apply_index(i), ds.apply_index(j));
  });
}

Relation greatest_bisim(const LiftingPtr& L, const Coalgebra& c, const Coalgebra& d) {
  Relation R = Relation::full(c.states(), d.states());
  const std::size_t sweeps = c.states().size() * d.states().size() + 1;
  for (std::size_t n = 0; n < sweeps; ++n) {
    const Relation next = R.intersect(refine_step(L, c, d, R));
    if (next == R) return R;
    R = next;
  }
  throw invariant_error("greatest_bisim: descent did not close within |X||Y|+1 sweeps");
}

bool is_bisimulation(const LiftingPtr& L, const Coalgebra& c, const Coalgebra& d,
                     const Relation& R) {
  return R.subset_of(refine_step(L, c, d, R));
}

Relation kripke_bisim_oracle(const Coalgebra& c, const Coalgebra& d) {
  if (c.functor()->name() != "P" || d.functor()->name() != "P") {
    throw contract_error("kripke_bisim_oracle: both coalgebras must be over P");
  }
  const std::size_t nx = c.states().size();
  const std::size_t ny = d.states().size();

  const auto successor_indices = [](const Coalgebra& m) {
    std::vector<std::vector<std::size_t>> out(m.states().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Value& succ = m.structure().target().at(m.structure().apply_index(i));
      for (const auto& v : succ.elements()) {
        out[i].push_back(m.states().index_of_checked(v, "successor state"));
      }
    }
    return out;
  };
  const auto sx = successor_indices(c);
  const auto sy = successor_indices(d);

  std::vector<char> rel(nx * ny, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) {
        if (!rel[i * ny + j]) continue;
        bool ok = true;
        for (const std::size_t xs : sx[i]) {
          bool hit = false;
          for (const std::size_t yt : sy[j]) {
            if (rel[xs * ny + yt]) {
              hit = true;
              break;
            }
          }
          if (!hit) {
            ok = false;
            break;
          }
        }
        if (ok) {
          for (const std::size_t yt : sy[j]) {
            bool hit = false;
            for (const std::size_t xs : sx[i]) {
              if (rel[xs * ny + yt]) {
                hit = true;
                break;
              }
            }
            if (!hit) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) {
          rel[i * ny + j] = 0;
          changed = true;
        }
      }
    }
  }
  return Relation::build(c.states(), d.states(),
                         [&](std::size_t i, std::size_t j) { return rel[i * ny + j] != 0; });
}

Coalgebra random_coalgebra(const FunctorPtr& F, const FiniteSet& states,
                           std::mt19937_64& rng) {
  if (!F) throw contract_error("random_coalgebra: null functor");
  const FiniteSet carrier = F->carrier(states);
  if (!states.size()) {
    return Coalgebra(F, states, Function::from_indices(states, carrier, {}));
  }
  if (!carrier.size()) throw contract_error("random_coalgebra: empty structure carrier");
  std::vector<std::uint32_t> image(states.size());
  for (auto& ix : image) ix = static_cast<std::uint32_t>(rng() % carrier.size());
  return Coalgebra(F, states, Function::from_indices(states, carrier, std::move(image)));
}

}  // namespace relift
