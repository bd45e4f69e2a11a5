#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "relift/value.hpp"

namespace relift {

/// Immutable finite set of Values, stored sorted and deduplicated.  Cheap to
/// copy (the element vector is shared), safe to use from several threads.
class FiniteSet {
 public:
  FiniteSet();

  /// Sorts and deduplicates.
  static FiniteSet of(std::vector<Value> elements);
  /// {a0, ..., a_{n-1}}.
  static FiniteSet atoms(std::size_t n);
  /// Set built from an already sorted, duplicate-free vector; unchecked.
  static FiniteSet from_sorted_unique(std::vector<Value> elements);

  std::size_t size() const { return elems_->size(); }
  bool empty() const { return elems_->empty(); }
  const Value& at(std::size_t i) const { return (*elems_)[i]; }
  std::span<const Value> values() const { return {elems_->data(), elems_->size()}; }

  bool contains(const Value& v) const;
  std::optional<std::size_t> index_of(const Value& v) const;
  /// index_of that throws contract_error mentioning `what` when absent.
  std::size_t index_of_checked(const Value& v, const char* what) const;

  /// The set as a single FSet value.
  Value as_value() const;

  FiniteSet union_with(const FiniteSet& other) const;

  std::string text() const { return as_value().text(); }

  friend bool operator==(const FiniteSet& a, const FiniteSet& b);
  friend bool operator!=(const FiniteSet& a, const FiniteSet& b) { return !(a == b); }

 private:
  explicit FiniteSet(std::shared_ptr<const std::vector<Value>> elems) : elems_(std::move(elems)) {}

  std::shared_ptr<const std::vector<Value>> elems_;
};

/// Canonical order of subsets of a common sorted base, expressed on index
/// bitmasks.  Equals the Value order of the corresponding FSets, i.e.
/// lexicographic on ascending element lists.
bool subset_lex_less(std::uint64_t a, std::uint64_t b);

/// Powerset carrier of `base` together with the mask<->index translation.
/// carrier.at(i) is the subset with index bitmask mask_of[i]; the carrier is
/// sorted in the canonical Value order.
struct PowersetView {
  FiniteSet base;
  FiniteSet carrier;
  std::vector<std::uint32_t> mask_of;        // carrier index -> base mask
  std::vector<std::int32_t> index_of_mask;   // base mask -> carrier index

  std::size_t index_of(std::uint32_t mask) const {
    return static_cast<std::size_t>(index_of_mask[mask]);
  }
  std::uint32_t full_mask() const {
    return base.size() == 32 ? 0xffffffffu : (1u << base.size()) - 1u;
  }
};

/// Memoized; guarded by the carrier limit.
std::shared_ptr<const PowersetView> powerset_view(const FiniteSet& base);

/// The powerset of `base` as a FiniteSet of FSet values, canonically sorted.
FiniteSet powerset(const FiniteSet& base);

}  // namespace relift
