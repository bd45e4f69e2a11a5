#include "relift/kleisli.hpp"

#include "relift/errors.hpp"

namespace relift {

Function to_kleisli(const Relation& R) {
  auto view = powerset_view(R.target());
  std::vector<std::uint32_t> image;
  image.reserve(R.source().size());
  for (std::size_t i = 0; i < R.source().size(); ++i) {
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < R.target().size(); ++j) {
      if (R.contains(i, j)) mask |= 1u << j;
    }
    image.push_back(static_cast<std::uint32_t>(view->index_of(mask)));
  }
  return Function::from_indices(R.source(), view->carrier, std::move(image));
}

namespace {

/// Recovers the base Y of a powerset carrier P(Y); the carrier of a true
/// powerset contains its base as the unique maximal element under inclusion,
/// and has exactly 2^|Y| elements.
FiniteSet kleisli_base(const FiniteSet& carrier) {
  std::vector<Value> base_elems;
  for (const Value& v : carrier.values()) {
    if (!v.is_set()) {
      throw contract_error("Kleisli target is not a powerset carrier: element " + v.text() +
                           " is not a set");
    }
    for (const Value& e : v.elements()) base_elems.push_back(e);
  }
  FiniteSet base = FiniteSet::of(std::move(base_elems));
  std::optional<std::uint64_t> expected;
  if (base.size() < 63) expected = std::uint64_t{1} << base.size();
  if (!expected || carrier.size() != *expected) {
    throw contract_error("Kleisli target is not a powerset carrier: " +
                         std::to_string(carrier.size()) + " elements over a base of size " +
                         std::to_string(base.size()));
  }
  return base;
}

}  // namespace

Relation from_kleisli(const Function& f) {
  const FiniteSet base = kleisli_base(f.target());
  auto view = powerset_view(base);
  if (view->carrier != f.target()) {
    throw contract_error("Kleisli target is not the powerset carrier of " + base.text());
  }
  return Relation::build(f.source(), base, [&](std::size_t i, std::size_t j) {
    return view->mask_of[f.apply_index(i)] >> j & 1u;
  });
}

Function flat(const Function& f) { return to_kleisli(converse(from_kleisli(f))); }

const Value& totalization_point() {
  static const Value star = Value::atom(0xffffffffull);
  return star;
}

Totalization totalize(const Relation& R) {
  const Value& star = totalization_point();
  if (R.source().contains(star) || R.target().contains(star)) {
    throw contract_error("totalize input already contains the reserved fresh point " + star.text());
  }
  Totalization t;
  t.source_star = R.source().union_with(FiniteSet::of({star}));
  t.target_star = R.target().union_with(FiniteSet::of({star}));

  std::vector<std::pair<Value, Value>> pairs = R.pairs();
  for (std::size_t i = 0; i < R.source().size(); ++i) {
    bool related = false;
    for (std::size_t j = 0; j < R.target().size() && !related; ++j) related = R.contains(i, j);
    if (!related) pairs.emplace_back(R.source().at(i), star);
  }
  for (std::size_t j = 0; j < R.target().size(); ++j) {
    bool related = false;
    for (std::size_t i = 0; i < R.source().size() && !related; ++i) related = R.contains(i, j);
    if (!related) pairs.emplace_back(star, R.target().at(j));
  }
  pairs.emplace_back(star, star);
  t.completed = Relation::from_pairs(t.source_star, t.target_star, pairs);

  t.into_source = Function::from_map(R.source(), t.source_star, [](const Value& v) { return v; });
  t.into_target = Function::from_map(R.target(), t.target_star, [](const Value& v) { return v; });
  return t;
}

}  // namespace relift
