#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "relift/finite_set.hpp"
#include "relift/function.hpp"

namespace relift {

/// Binary relation between finite sets, stored as a dense bit matrix keyed
/// by element index (rows = source, columns = target).  Immutable; copies
/// share the bit storage.
class Relation {
 public:
  Relation();

  static Relation empty(FiniteSet source, FiniteSet target);
  static Relation full(FiniteSet source, FiniteSet target);
  static Relation build(FiniteSet source, FiniteSet target,
                        const std::function<bool(std::size_t, std::size_t)>& holds);
  /// Every pair must lie within the carriers.
  static Relation from_pairs(FiniteSet source, FiniteSet target,
                             const std::vector<std::pair<Value, Value>>& pairs);
  /// Bit i*|target|+j of `mask` holds (i,j); requires |source|*|target| <= 64.
  static Relation from_mask(FiniteSet source, FiniteSet target, std::uint64_t mask);

  const FiniteSet& source() const { return source_; }
  const FiniteSet& target() const { return target_; }

  bool contains(std::size_t i, std::size_t j) const {
    return (*bits_)[i * words_ + (j >> 6)] >> (j & 63) & 1u;
  }
  bool contains(const Value& x, const Value& y) const;

  std::size_t pair_count() const;
  /// Pairs in canonical (source index, target index) order.
  std::vector<std::pair<Value, Value>> pairs() const;
  /// The pairs as a FiniteSet of Pair values.
  FiniteSet pair_set() const;
  /// mask encoding matching from_mask; requires |source|*|target| <= 64.
  std::uint64_t as_mask() const;

  bool subset_of(const Relation& other) const;
  Relation intersect(const Relation& other) const;
  Relation unite(const Relation& other) const;

  bool is_total() const;
  bool is_surjective() const;

  std::string text() const;

  friend bool operator==(const Relation& a, const Relation& b);
  friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }
  friend Relation compose(const Relation& R, const Relation& S);

 private:
  Relation(FiniteSet source, FiniteSet target,
           std::shared_ptr<const std::vector<std::uint64_t>> bits);

  void require_same_carriers(const Relation& other, const char* op) const;

  FiniteSet source_;
  FiniteSet target_;
  std::size_t words_ = 0;  // 64-bit words per row
  std::shared_ptr<const std::vector<std::uint64_t>> bits_;
};

/// Diagrammatic composition: compose(R, S) = R;S relates x to z when some y
/// has x R y and y S z.
Relation compose(const Relation& R, const Relation& S);
Relation converse(const Relation& R);
Relation diagonal(const FiniteSet& X);
Relation graph(const Function& f);
/// Membership relation of X: powerset(X) <-> X, relating A to x when x in A.
Relation membership(const FiniteSet& X);

}  // namespace relift
