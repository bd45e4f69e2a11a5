#include "relift/relation.hpp"

#include <bit>

#include "relift/errors.hpp"

namespace relift {

namespace {

std::size_t words_for(std::size_t cols) { return cols == 0 ? 1 : (cols + 63) / 64; }

}  // namespace

Relation::Relation() : Relation(FiniteSet(), FiniteSet(), nullptr) {}

Relation::Relation(FiniteSet source, FiniteSet target,
                   std::shared_ptr<const std::vector<std::uint64_t>> bits)
    : source_(std::move(source)), target_(std::move(target)), words_(words_for(target_.size())) {
  if (bits) {
    bits_ = std::move(bits);
  } else {
    bits_ = std::make_shared<const std::vector<std::uint64_t>>(source_.size() * words_, 0);
  }
}

Relation Relation::empty(FiniteSet source, FiniteSet target) {
  return Relation(std::move(source), std::move(target), nullptr);
}

Relation Relation::full(FiniteSet source, FiniteSet target) {
  const std::size_t rows = source.size();
  const std::size_t cols = target.size();
  const std::size_t words = words_for(cols);
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) bits[i * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  }
  return Relation(std::move(source), std::move(target),
                  std::make_shared<const std::vector<std::uint64_t>>(std::move(bits)));
}

Relation Relation::build(FiniteSet source, FiniteSet target,
                         const std::function<bool(std::size_t, std::size_t)>& holds) {
  const std::size_t rows = source.size();
  const std::size_t cols = target.size();
  const std::size_t words = words_for(cols);
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (holds(i, j)) bits[i * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }
  }
  return Relation(std::move(source), std::move(target),
                  std::make_shared<const std::vector<std::uint64_t>>(std::move(bits)));
}

Relation Relation::from_pairs(FiniteSet source, FiniteSet target,
                              const std::vector<std::pair<Value, Value>>& pairs) {
  const std::size_t words = words_for(target.size());
  std::vector<std::uint64_t> bits(source.size() * words, 0);
  for (const auto& [x, y] : pairs) {
    const std::size_t i = source.index_of_checked(x, "relation pair source");
    const std::size_t j = target.index_of_checked(y, "relation pair target");
    bits[i * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  }
  return Relation(std::move(source), std::move(target),
                  std::make_shared<const std::vector<std::uint64_t>>(std::move(bits)));
}

Relation Relation::from_mask(FiniteSet source, FiniteSet target, std::uint64_t mask) {
  const std::size_t rows = source.size();
  const std::size_t cols = target.size();
  if (rows * cols > 64) throw contract_error("relation mask encoding needs |X|*|Y| <= 64");
  return build(std::move(source), std::move(target), [&](std::size_t i, std::size_t j) {
    return mask >> (i * cols + j) & 1u;
  });
}

bool Relation::contains(const Value& x, const Value& y) const {
  const std::size_t i = source_.index_of_checked(x, "relation membership source");
  const std::size_t j = target_.index_of_checked(y, "relation membership target");
  return contains(i, j);
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (std::uint64_t w : *bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::pair<Value, Value>> Relation::pairs() const {
  std::vector<std::pair<Value, Value>> out;
  for (std::size_t i = 0; i < source_.size(); ++i) {
    for (std::size_t j = 0; j < target_.size(); ++j) {
      if (contains(i, j)) out.emplace_back(source_.at(i), target_.at(j));
    }
  }
  return out;
}

FiniteSet Relation::pair_set() const {
  std::vector<Value> elems;
  for (auto& [x, y] : pairs()) elems.push_back(Value::pair(x, y));
  return FiniteSet::of(std::move(elems));
}

std::uint64_t Relation::as_mask() const {
  const std::size_t cols = target_.size();
  if (source_.size() * cols > 64) throw contract_error("relation mask encoding needs |X|*|Y| <= 64");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < source_.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (contains(i, j)) mask |= std::uint64_t{1} << (i * cols + j);
    }
  }
  return mask;
}

void Relation::require_same_carriers(const Relation& other, const char* op) const {
  if (source_ != other.source_ || target_ != other.target_) {
    throw contract_error(std::string(op) + " needs relations over the same carriers");
  }
}

bool Relation::subset_of(const Relation& other) const {
  require_same_carriers(other, "subset test");
  for (std::size_t w = 0; w < bits_->size(); ++w) {
    if ((*bits_)[w] & ~(*other.bits_)[w]) return false;
  }
  return true;
}

Relation Relation::intersect(const Relation& other) const {
  require_same_carriers(other, "intersection");
  std::vector<std::uint64_t> bits(bits_->size());
  for (std::size_t w = 0; w < bits.size(); ++w) bits[w] = (*bits_)[w] & (*other.bits_)[w];
  return Relation(source_, target_, std::make_shared<const std::vector<std::uint64_t>>(std::move(bits)));
}

Relation Relation::unite(const Relation& other) const {
  require_same_carriers(other, "union");
  std::vector<std::uint64_t> bits(bits_->size());
  for (std::size_t w = 0; w < bits.size(); ++w) bits[w] = (*bits_)[w] | (*other.bits_)[w];
  return Relation(source_, target_, std::make_shared<const std::vector<std::uint64_t>>(std::move(bits)));
}

bool Relation::is_total() const {
  for (std::size_t i = 0; i < source_.size(); ++i) {
    bool any = false;
    for (std::size_t w = 0; w < words_; ++w) any = any || (*bits_)[i * words_ + w];
    if (!any) return false;
  }
  return true;
}

bool Relation::is_surjective() const {
  for (std::size_t j = 0; j < target_.size(); ++j) {
    bool any = false;
    for (std::size_t i = 0; i < source_.size() && !any; ++i) any = contains(i, j);
    if (!any) return false;
  }
  return true;
}

std::string Relation::text() const {
  std::string out = "{";
  bool sep = false;
  for (auto& [x, y] : pairs()) {
    if (sep) out += ",";
    out += "(" + x.text() + "," + y.text() + ")";
    sep = true;
  }
  out += "}";
  return out;
}

bool operator==(const Relation& a, const Relation& b) {
  if (a.source_ != b.source_ || a.target_ != b.target_) return false;
  if (a.bits_ == b.bits_) return true;
  return *a.bits_ == *b.bits_;
}

Relation compose(const Relation& R, const Relation& S) {
  if (R.target() != S.source()) {
    throw contract_error("composition needs the middle carriers to agree: " + R.target().text() +
                         " vs " + S.source().text());
  }
  const std::size_t rows = R.source().size();
  const std::size_t mids = R.target().size();
  const std::size_t words = words_for(S.target().size());
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < mids; ++j) {
      if (!R.contains(i, j)) continue;
      for (std::size_t w = 0; w < words; ++w) bits[i * words + w] |= (*S.bits_)[j * words + w];
    }
  }
  return Relation(R.source(), S.target(),
                  std::make_shared<const std::vector<std::uint64_t>>(std::move(bits)));
}

Relation converse(const Relation& R) {
  return Relation::build(R.target(), R.source(),
                         [&](std::size_t j, std::size_t i) { return R.contains(i, j); });
}

Relation diagonal(const FiniteSet& X) {
  return Relation::build(X, X, [](std::size_t i, std::size_t j) { return i == j; });
}

Relation graph(const Function& f) {
  return Relation::build(f.source(), f.target(),
                         [&](std::size_t i, std::size_t j) { return f.apply_index(i) == j; });
}

Relation membership(const FiniteSet& X) {
  auto view = powerset_view(X);
  return Relation::build(view->carrier, X, [&](std::size_t a, std::size_t x) {
    return view->mask_of[a] >> x & 1u;
  });
}

}  // namespace relift
