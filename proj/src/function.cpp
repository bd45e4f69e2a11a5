#include "relift/function.hpp"

#include "relift/errors.hpp"

namespace relift {

namespace {

const std::shared_ptr<const std::vector<std::uint32_t>>& empty_image() {
  static const auto v = std::make_shared<const std::vector<std::uint32_t>>();
  return v;
}

}  // namespace

Function::Function() : image_(empty_image()) {}

Function Function::from_indices(FiniteSet source, FiniteSet target,
                                std::vector<std::uint32_t> image) {
  if (image.size() != source.size()) {
    throw contract_error("function image table has " + std::to_string(image.size()) +
                         " entries for a source of size " + std::to_string(source.size()));
  }
  for (std::uint32_t t : image) {
    if (t >= target.size()) {
      throw contract_error("function image index " + std::to_string(t) +
                           " is outside the target of size " + std::to_string(target.size()));
    }
  }
  return Function(std::move(source), std::move(target),
                  std::make_shared<const std::vector<std::uint32_t>>(std::move(image)));
}

Function Function::from_map(FiniteSet source, FiniteSet target,
                            const std::function<Value(const Value&)>& f) {
  std::vector<std::uint32_t> image;
  image.reserve(source.size());
  for (const Value& x : source.values()) {
    const Value y = f(x);
    image.push_back(static_cast<std::uint32_t>(
        target.index_of_checked(y, "function image outside target")));
  }
  return Function(std::move(source), std::move(target),
                  std::make_shared<const std::vector<std::uint32_t>>(std::move(image)));
}

Function Function::identity(const FiniteSet& X) {
  std::vector<std::uint32_t> image(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) image[i] = static_cast<std::uint32_t>(i);
  return Function(X, X, std::make_shared<const std::vector<std::uint32_t>>(std::move(image)));
}

Function Function::constant(const FiniteSet& X, FiniteSet target, const Value& y) {
  const std::size_t j = target.index_of_checked(y, "constant function value");
  std::vector<std::uint32_t> image(X.size(), static_cast<std::uint32_t>(j));
  return Function(X, std::move(target),
                  std::make_shared<const std::vector<std::uint32_t>>(std::move(image)));
}

const Value& Function::apply(const Value& x) const {
  const std::size_t i = source_.index_of_checked(x, "function argument");
  return target_.at((*image_)[i]);
}

Function Function::after(const Function& f) const {
  if (f.target_ != source_) {
    throw contract_error("function composition mismatch: inner target " + f.target_.text() +
                         " differs from outer source " + source_.text());
  }
  std::vector<std::uint32_t> image(f.source_.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    image[i] = (*image_)[(*f.image_)[i]];
  }
  return Function(f.source_, target_,
                  std::make_shared<const std::vector<std::uint32_t>>(std::move(image)));
}

bool operator==(const Function& a, const Function& b) {
  if (a.source_ != b.source_ || a.target_ != b.target_) return false;
  if (a.image_ == b.image_) return true;
  return *a.image_ == *b.image_;
}

}  // namespace relift
