#include "relift/finite_set.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "relift/errors.hpp"

namespace relift {

namespace {

const std::shared_ptr<const std::vector<Value>>& empty_elems() {
  static const auto v = std::make_shared<const std::vector<Value>>();
  return v;
}

}  // namespace

FiniteSet::FiniteSet() : elems_(empty_elems()) {}

FiniteSet FiniteSet::of(std::vector<Value> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return FiniteSet(std::make_shared<const std::vector<Value>>(std::move(elements)));
}

FiniteSet FiniteSet::atoms(std::size_t n) {
  std::vector<Value> elems;
  elems.reserve(n);
  for (std::size_t i = 0; i < n; ++i) elems.push_back(Value::atom(i));
  return from_sorted_unique(std::move(elems));
}

FiniteSet FiniteSet::from_sorted_unique(std::vector<Value> elements) {
  return FiniteSet(std::make_shared<const std::vector<Value>>(std::move(elements)));
}

bool FiniteSet::contains(const Value& v) const {
  return std::binary_search(elems_->begin(), elems_->end(), v);
}

std::optional<std::size_t> FiniteSet::index_of(const Value& v) const {
  auto it = std::lower_bound(elems_->begin(), elems_->end(), v);
  if (it == elems_->end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - elems_->begin());
}

std::size_t FiniteSet::index_of_checked(const Value& v, const char* what) const {
  auto idx = index_of(v);
  if (!idx) throw contract_error(std::string(what) + ": value " + v.text() + " is not in " + text());
  return *idx;
}

Value FiniteSet::as_value() const { return Value::set(*elems_); }

FiniteSet FiniteSet::union_with(const FiniteSet& other) const {
  std::vector<Value> elems(elems_->begin(), elems_->end());
  elems.insert(elems.end(), other.elems_->begin(), other.elems_->end());
  return of(std::move(elems));
}

bool operator==(const FiniteSet& a, const FiniteSet& b) {
  if (a.elems_ == b.elems_) return true;
  return *a.elems_ == *b.elems_;
}

bool subset_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  const std::uint64_t low = diff & (~diff + 1);
  const std::uint64_t above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;  // b continues with a larger element, or is a prefix
  return (a & above) == 0;
}

std::shared_ptr<const PowersetView> powerset_view(const FiniteSet& base) {
  static std::mutex mu;
  static std::map<Value, std::shared_ptr<const PowersetView>> cache;
  const Value key = base.as_value();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const std::size_t n = base.size();
  std::optional<std::uint64_t> cost;
  if (n < 63) cost = std::uint64_t{1} << n;
  guard_carrier(cost, "powerset of a " + std::to_string(n) + "-element set");
  if (n > 24) {
    throw resource_error("powerset of a " + std::to_string(n) +
                         "-element set exceeds the index-table limit (24 base elements)");
  }
  const std::uint32_t count = std::uint32_t{1} << n;

  auto view = std::make_shared<PowersetView>();
  view->base = base;
  view->mask_of.resize(count);
  std::iota(view->mask_of.begin(), view->mask_of.end(), 0u);
  std::sort(view->mask_of.begin(), view->mask_of.end(),
            [](std::uint32_t a, std::uint32_t b) { return subset_lex_less(a, b); });
  view->index_of_mask.assign(count, -1);
  std::vector<Value> carrier;
  carrier.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t mask = view->mask_of[i];
    view->index_of_mask[mask] = static_cast<std::int32_t>(i);
    std::vector<Value> elems;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask >> b & 1u) elems.push_back(base.at(b));
    }
    carrier.push_back(Value::set(std::move(elems)));
  }
  view->carrier = FiniteSet::from_sorted_unique(std::move(carrier));

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(view));
  (void)inserted;
  return it->second;
}

FiniteSet powerset(const FiniteSet& base) { return powerset_view(base)->carrier; }

}  // namespace relift
