#pragma once

#include <memory>
#include <optional>
#include <string>

#include "relift/finite_set.hpp"
#include "relift/function.hpp"

namespace relift {

/// Set endofunctor restricted to finite sets: a carrier construction and a
/// function action.  Instances are stateless and shareable; carriers are
/// deterministic per input set and guarded by the carrier limit.
class Endofunctor {
 public:
  virtual ~Endofunctor() = default;

  virtual const std::string& name() const = 0;
  virtual FiniteSet carrier(const FiniteSet& X) const = 0;
  virtual Function map(const Function& f) const = 0;
  /// Enumeration work needed to build the carrier over an n-element set;
  /// nullopt when it does not fit in 64 bits.
  virtual std::optional<std::uint64_t> carrier_cost(std::uint64_t n) const = 0;
};

using FunctorPtr = std::shared_ptr<const Endofunctor>;

FunctorPtr powerset_functor();                 // P: direct images
FunctorPtr neighbourhood_functor();            // N: inverse-image action
FunctorPtr monotone_neighbourhood_functor();   // M: up-closed families
FunctorPtr identity_functor();                 // Id
FunctorPtr constant_functor(std::size_t k);    // Const(k), carrier {a0..a_{k-1}}

/// Parses "P", "N", "M", "Id", "Const(k)".
FunctorPtr functor_by_name(const std::string& name);

/// Carrier of N X or M X with the translation between carrier indices and
/// family bitmasks.  A family bitmask is a mask over the inner powerset
/// carrier's indices; it orders consistently with the Value order via
/// subset_lex_less because the inner carrier is itself canonically sorted.
struct FamilyView {
  std::shared_ptr<const PowersetView> inner;  // P(X) over X
  FiniteSet carrier;
  std::vector<std::uint32_t> family_of;        // carrier index -> family bitmask
  std::vector<std::int32_t> index_of_family;   // family bitmask -> carrier index, -1 if absent

  std::size_t index_of(std::uint32_t family, const char* what) const;
  std::uint32_t family_of_value(const Value& v, const char* what) const;
};

std::shared_ptr<const FamilyView> neighbourhood_view(const FiniteSet& X);
std::shared_ptr<const FamilyView> monotone_view(const FiniteSet& X);

/// Unit of the powerset monad at X: x |-> {x}.
Function pow_unit(const FiniteSet& X);
/// Multiplication of the powerset monad at X: union of a set of subsets.
Function pow_mult(const FiniteSet& X);

struct PowersetMonad {
  FunctorPtr functor = powerset_functor();
  Function unit(const FiniteSet& X) const { return pow_unit(X); }
  Function mult(const FiniteSet& X) const { return pow_mult(X); }
};

}  // namespace relift
