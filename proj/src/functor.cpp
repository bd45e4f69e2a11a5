#include "relift/functor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "relift/errors.hpp"

namespace relift {

namespace {

std::optional<std::uint64_t> pow2(std::uint64_t n) {
  if (n >= 63) return std::nullopt;
  return std::uint64_t{1} << n;
}

/// Family enumeration cost for N and M over an n-element set: 2^(2^n).
std::optional<std::uint64_t> family_cost(std::uint64_t n) {
  auto inner = pow2(n);
  if (!inner) return std::nullopt;
  return pow2(*inner);
}

/// inner carrier index of the preimage of the subset with inner index `vi`
/// under f, for each vi.  Shared by the N and M actions.
std::vector<std::uint32_t> preimage_index_table(const PowersetView& src, const PowersetView& dst,
                                                const Function& f) {
  std::vector<std::uint32_t> table(dst.carrier.size());
  for (std::size_t vi = 0; vi < dst.carrier.size(); ++vi) {
    const std::uint32_t v_mask = dst.mask_of[vi];
    std::uint32_t pre = 0;
    for (std::size_t x = 0; x < src.base.size(); ++x) {
      if (v_mask >> f.apply_index(x) & 1u) pre |= 1u << x;
    }
    table[vi] = static_cast<std::uint32_t>(src.index_of(pre));
  }
  return table;
}

std::uint32_t neighbourhood_step(std::uint32_t family, const std::vector<std::uint32_t>& pre) {
  std::uint32_t out = 0;
  for (std::size_t vi = 0; vi < pre.size(); ++vi) {
    if (family >> pre[vi] & 1u) out |= 1u << vi;
  }
  return out;
}

std::shared_ptr<const FamilyView> build_family_view(const FiniteSet& X, bool up_closed_only) {
  guard_carrier(family_cost(X.size()),
                std::string("carrier of ") + (up_closed_only ? "M" : "N") + " over a " +
                    std::to_string(X.size()) + "-element set");
  auto inner = powerset_view(X);
  const std::size_t subset_count = inner->carrier.size();
  const std::uint64_t family_count = std::uint64_t{1} << subset_count;

  // For up-closure filtering: family mask of all supersets of each subset.
  std::vector<std::uint32_t> sup_mask(subset_count, 0);
  if (up_closed_only) {
    for (std::size_t i = 0; i < subset_count; ++i) {
      for (std::size_t j = 0; j < subset_count; ++j) {
        if ((inner->mask_of[i] & ~inner->mask_of[j]) == 0) sup_mask[i] |= 1u << j;
      }
    }
  }

  auto view = std::make_shared<FamilyView>();
  view->inner = inner;
  view->index_of_family.assign(family_count, -1);

  std::vector<std::uint32_t> families;
  families.reserve(up_closed_only ? 0 : family_count);
  for (std::uint64_t m = 0; m < family_count; ++m) {
    const auto family = static_cast<std::uint32_t>(m);
    if (up_closed_only) {
      bool closed = true;
      for (std::size_t i = 0; i < subset_count && closed; ++i) {
        if (family >> i & 1u) closed = (sup_mask[i] & ~family) == 0;
      }
      if (!closed) continue;
    }
    families.push_back(family);
  }
  std::sort(families.begin(), families.end(),
            [](std::uint32_t a, std::uint32_t b) { return subset_lex_less(a, b); });

  view->family_of = families;
  std::vector<Value> carrier;
  carrier.reserve(families.size());
  for (std::size_t idx = 0; idx < families.size(); ++idx) {
    const std::uint32_t family = families[idx];
    view->index_of_family[family] = static_cast<std::int32_t>(idx);
    std::vector<Value> elems;
    for (std::size_t i = 0; i < subset_count; ++i) {
      if (family >> i & 1u) elems.push_back(inner->carrier.at(i));
    }
    carrier.push_back(Value::set(std::move(elems)));
  }
  view->carrier = FiniteSet::from_sorted_unique(std::move(carrier));
  return view;
}

std::shared_ptr<const FamilyView> cached_family_view(const FiniteSet& X, bool up_closed_only) {
  static std::mutex mu;
  static std::map<std::pair<bool, Value>, std::shared_ptr<const FamilyView>> cache;
  const std::pair<bool, Value> key{up_closed_only, X.as_value()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto view = build_family_view(X, up_closed_only);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(view));
  (void)inserted;
  return it->second;
}

class PowersetFunctor final : public Endofunctor {
 public:
  const std::string& name() const override {
    static const std::string n = "P";
    return n;
  }

  FiniteSet carrier(const FiniteSet& X) const override {
    guard_carrier(carrier_cost(X.size()),
                  "carrier of P over a " + std::to_string(X.size()) + "-element set");
    return powerset(X);
  }

  Function map(const Function& f) const override {
    auto src = powerset_view(f.source());
    auto dst = powerset_view(f.target());
    std::vector<std::uint32_t> image(src->carrier.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      const std::uint32_t in_mask = src->mask_of[i];
      std::uint32_t out_mask = 0;
      for (std::size_t x = 0; x < f.source().size(); ++x) {
        if (in_mask >> x & 1u) out_mask |= 1u << f.apply_index(x);
      }
      image[i] = static_cast<std::uint32_t>(dst->index_of(out_mask));
    }
    return Function::from_indices(src->carrier, dst->carrier, std::move(image));
  }

  std::optional<std::uint64_t> carrier_cost(std::uint64_t n) const override { return pow2(n); }
};

class NeighbourhoodFunctor final : public Endofunctor {
 public:
  const std::string& name() const override {
    static const std::string n = "N";
    return n;
  }

  FiniteSet carrier(const FiniteSet& X) const override { return neighbourhood_view(X)->carrier; }

  Function map(const Function& f) const override {
    auto src = neighbourhood_view(f.source());
    auto dst = neighbourhood_view(f.target());
    const auto pre = preimage_index_table(*src->inner, *dst->inner, f);
    std::vector<std::uint32_t> image(src->carrier.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      const std::uint32_t out = neighbourhood_step(src->family_of[i], pre);
      image[i] = static_cast<std::uint32_t>(dst->index_of(out, "neighbourhood action"));
    }
    return Function::from_indices(src->carrier, dst->carrier, std::move(image));
  }

  std::optional<std::uint64_t> carrier_cost(std::uint64_t n) const override {
    return family_cost(n);
  }
};

class MonotoneFunctor final : public Endofunctor {
 public:
  const std::string& name() const override {
    static const std::string n = "M";
    return n;
  }

  FiniteSet carrier(const FiniteSet& X) const override { return monotone_view(X)->carrier; }

  Function map(const Function& f) const override {
    auto src = monotone_view(f.source());
    auto dst = monotone_view(f.target());
    const auto pre = preimage_index_table(*src->inner, *dst->inner, f);
    std::vector<std::uint32_t> image(src->carrier.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      const std::uint32_t out = neighbourhood_step(src->family_of[i], pre);
      const std::int32_t idx = dst->index_of_family[out];
      if (idx < 0) {
        throw invariant_error("monotone action produced a family that is not up-closed");
      }
      image[i] = static_cast<std::uint32_t>(idx);
    }
    return Function::from_indices(src->carrier, dst->carrier, std::move(image));
  }

  std::optional<std::uint64_t> carrier_cost(std::uint64_t n) const override {
    return family_cost(n);
  }
};

class IdentityFunctor final : public Endofunctor {
 public:
  const std::string& name() const override {
    static const std::string n = "Id";
    return n;
  }
  FiniteSet carrier(const FiniteSet& X) const override { return X; }
  Function map(const Function& f) const override { return f; }
  std::optional<std::uint64_t> carrier_cost(std::uint64_t n) const override { return n; }
};

class ConstantFunctor final : public Endofunctor {
 public:
  explicit ConstantFunctor(std::size_t k)
      : name_("Const(" + std::to_string(k) + ")"), value_(FiniteSet::atoms(k)) {}

  const std::string& name() const override { return name_; }
  FiniteSet carrier(const FiniteSet&) const override { return value_; }
  Function map(const Function&) const override { return Function::identity(value_); }
  std::optional<std::uint64_t> carrier_cost(std::uint64_t) const override { return value_.size(); }

 private:
  std::string name_;
  FiniteSet value_;
};

}  // namespace

std::size_t FamilyView::index_of(std::uint32_t family, const char* what) const {
  const std::int32_t idx = index_of_family[family];
  if (idx < 0) throw contract_error(std::string(what) + ": family is not in the carrier");
  return static_cast<std::size_t>(idx);
}

std::uint32_t FamilyView::family_of_value(const Value& v, const char* what) const {
  return family_of[carrier.index_of_checked(v, what)];
}

std::shared_ptr<const FamilyView> neighbourhood_view(const FiniteSet& X) {
  return cached_family_view(X, false);
}

std::shared_ptr<const FamilyView> monotone_view(const FiniteSet& X) {
  return cached_family_view(X, true);
}

FunctorPtr powerset_functor() {
  static const FunctorPtr f = std::make_shared<PowersetFunctor>();
  return f;
}

FunctorPtr neighbourhood_functor() {
  static const FunctorPtr f = std::make_shared<NeighbourhoodFunctor>();
  return f;
}

FunctorPtr monotone_neighbourhood_functor() {
  static const FunctorPtr f = std::make_shared<MonotoneFunctor>();
  return f;
}

FunctorPtr identity_functor() {
  static const FunctorPtr f = std::make_shared<IdentityFunctor>();
  return f;
}

FunctorPtr constant_functor(std::size_t k) { return std::make_shared<ConstantFunctor>(k); }

FunctorPtr functor_by_name(const std::string& name) {
  if (name == "P") return powerset_functor();
  if (name == "N") return neighbourhood_functor();
  if (name == "M") return monotone_neighbourhood_functor();
  if (name == "Id") return identity_functor();
  if (name.rfind("Const(", 0) == 0 && name.back() == ')') {
    const std::string num = name.substr(6, name.size() - 7);
    if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos) {
      return constant_functor(static_cast<std::size_t>(std::stoull(num)));
    }
  }
  throw contract_error("unknown functor name: " + name);
}

Function pow_unit(const FiniteSet& X) {
  auto view = powerset_view(X);
  std::vector<std::uint32_t> image(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    image[i] = static_cast<std::uint32_t>(view->index_of(1u << i));
  }
  return Function::from_indices(X, view->carrier, std::move(image));
}

Function pow_mult(const FiniteSet& X) {
  auto inner = powerset_view(X);
  auto outer = powerset_view(inner->carrier);
  std::vector<std::uint32_t> image(outer->carrier.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const std::uint32_t fam = outer->mask_of[i];
    std::uint32_t unioned = 0;
    for (std::size_t s = 0; s < inner->carrier.size(); ++s) {
      if (fam >> s & 1u) unioned |= inner->mask_of[s];
    }
    image[i] = static_cast<std::uint32_t>(inner->index_of(unioned));
  }
  return Function::from_indices(outer->carrier, inner->carrier, std::move(image));
}

}  // namespace relift
