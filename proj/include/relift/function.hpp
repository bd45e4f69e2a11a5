#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "relift/finite_set.hpp"

namespace relift {

/// Total function between finite sets, stored as a dense vector of target
/// indices aligned with the source order.  Immutable and cheap to copy.
class Function {
 public:
  Function();

  /// `image[i]` is the target index of source element i; validated.
  static Function from_indices(FiniteSet source, FiniteSet target,
                               std::vector<std::uint32_t> image);
  /// Evaluates `f` on every source element; each image must lie in `target`.
  static Function from_map(FiniteSet source, FiniteSet target,
                           const std::function<Value(const Value&)>& f);
  static Function identity(const FiniteSet& X);
  static Function constant(const FiniteSet& X, FiniteSet target, const Value& y);

  const FiniteSet& source() const { return source_; }
  const FiniteSet& target() const { return target_; }

  std::size_t apply_index(std::size_t i) const { return (*image_)[i]; }
  const Value& apply(const Value& x) const;

  /// Composition in application order: (g.after(f))(x) = g(f(x)).
  Function after(const Function& f) const;

  friend bool operator==(const Function& a, const Function& b);
  friend bool operator!=(const Function& a, const Function& b) { return !(a == b); }

 private:
  Function(FiniteSet source, FiniteSet target,
           std::shared_ptr<const std::vector<std::uint32_t>> image)
      : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {}

  FiniteSet source_;
  FiniteSet target_;
  std::shared_ptr<const std::vector<std::uint32_t>> image_;
};

}  // namespace relift
