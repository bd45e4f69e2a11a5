#include "relift/nat_trans.hpp"

namespace relift {

namespace {

class IdentityNat final : public NatTrans {
 public:
  explicit IdentityNat(FunctorPtr F) : NatTrans("id_" + F->name(), F, F) {}
  Function component(const FiniteSet& X) const override {
    return Function::identity(source()->carrier(X));
  }
};

class MonotoneInclusion final : public NatTrans {
 public:
  MonotoneInclusion()
      : NatTrans("iota", monotone_neighbourhood_functor(), neighbourhood_functor()) {}

  Function component(const FiniteSet& X) const override {
    auto m = monotone_view(X);
    auto n = neighbourhood_view(X);
    std::vector<std::uint32_t> image(m->carrier.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      image[i] = static_cast<std::uint32_t>(n->index_of(m->family_of[i], "monotone inclusion"));
    }
    return Function::from_indices(m->carrier, n->carrier, std::move(image));
  }
};

class Singleton final : public NatTrans {
 public:
  Singleton() : NatTrans("singleton", identity_functor(), powerset_functor()) {}
  Function component(const FiniteSet& X) const override { return pow_unit(X); }
};

}  // namespace

NatTrans::NatTrans(std::string name, FunctorPtr source, FunctorPtr target)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {}

NatTransPtr identity_nat(FunctorPtr F) { return std::make_shared<IdentityNat>(std::move(F)); }

NatTransPtr inclusion_monotone_to_neighbourhood() {
  static const NatTransPtr t = std::make_shared<MonotoneInclusion>();
  return t;
}

NatTransPtr singleton_into_powerset() {
  static const NatTransPtr t = std::make_shared<Singleton>();
  return t;
}

}  // namespace relift
