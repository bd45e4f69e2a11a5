#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace relift {

/// Immutable hereditarily finite value: an atom, an ordered pair, or a
/// finite set.  Sets keep their elements sorted and deduplicated, so
/// structural equality coincides with canonical-form equality.
///
/// The global total order is Atom < Pair < FSet; atoms compare by index,
/// pairs lexicographically, sets lexicographically on their element lists.
///
/// Canonical text encoding: atoms `aN`, pairs `(v,w)`, sets `{v1,...,vk}`.
class Value {
 public:
  enum class Kind : std::uint8_t { atom = 0, pair = 1, set = 2 };

  /// Default-constructed value is the empty set.
  Value();

  static Value atom(std::uint64_t index);
  static Value pair(Value first, Value second);
  /// Sorts and deduplicates `elements`.
  static Value set(std::vector<Value> elements);
  static const Value& empty_set();

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::atom; }
  bool is_pair() const { return kind() == Kind::pair; }
  bool is_set() const { return kind() == Kind::set; }

  std::uint64_t atom_index() const;
  const Value& first() const;
  const Value& second() const;

  std::span<const Value> elements() const;
  std::size_t set_size() const;
  /// Membership test for sets; binary search over the sorted elements.
  bool set_contains(const Value& v) const;

  std::string text() const;

  /// Three-way comparison in the global total order.
  int compare(const Value& other) const;

  friend bool operator==(const Value& a, const Value& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Value& a, const Value& b) { return a.compare(b) != 0; }
  friend bool operator<(const Value& a, const Value& b) { return a.compare(b) < 0; }
  friend bool operator<=(const Value& a, const Value& b) { return a.compare(b) <= 0; }
  friend bool operator>(const Value& a, const Value& b) { return a.compare(b) > 0; }
  friend bool operator>=(const Value& a, const Value& b) { return a.compare(b) >= 0; }

 private:
  struct Node {
    Kind kind = Kind::set;
    std::uint64_t index = 0;       // atoms only
    std::vector<Value> children;   // pair: exactly two; set: sorted unique
  };

  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace relift
