#pragma once

#include <string>

#include "relift/functor.hpp"

namespace relift {

/// Natural transformation between set endofunctors, given by its components.
/// component(X) : source(X) -> target(X); naturality is checked by tests, not
/// assumed by construction.
class NatTrans {
 public:
  NatTrans(std::string name, FunctorPtr source, FunctorPtr target);
  virtual ~NatTrans() = default;

  const std::string& name() const { return name_; }
  const FunctorPtr& source() const { return source_; }
  const FunctorPtr& target() const { return target_; }

  virtual Function component(const FiniteSet& X) const = 0;

 private:
  std::string name_;
  FunctorPtr source_;
  FunctorPtr target_;
};

using NatTransPtr = std::shared_ptr<const NatTrans>;

/// Identity transformation on F.
NatTransPtr identity_nat(FunctorPtr F);

/// Inclusion of up-closed families into all families: M => N.
NatTransPtr inclusion_monotone_to_neighbourhood();

/// x |-> {x} as a transformation Id => P.
NatTransPtr singleton_into_powerset();

}  // namespace relift
