#include "relift/errors.hpp"

#include <atomic>
#include <cstdlib>

namespace relift {

namespace {

constexpr std::uint64_t kDefaultLimit = 65536;

std::uint64_t initial_limit() {
  if (const char* env = std::getenv("RELIFT_CARRIER_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
  }
  return kDefaultLimit;
}

std::atomic<std::uint64_t>& limit_cell() {
  static std::atomic<std::uint64_t> cell{initial_limit()};
  return cell;
}

}  // namespace

std::uint64_t carrier_limit() { return limit_cell().load(); }

void set_carrier_limit(std::uint64_t limit) {
  limit_cell().store(limit > 0 ? limit : kDefaultLimit);
}

void guard_carrier(std::optional<std::uint64_t> needed, const std::string& what) {
  const std::uint64_t limit = carrier_limit();
  if (!needed) {
    throw resource_error(what + " does not fit in 64 bits and exceeds the carrier limit " +
                         std::to_string(limit));
  }
  if (*needed > limit) {
    throw resource_error(what + " requires " + std::to_string(*needed) +
                         " elements, exceeding the carrier limit " + std::to_string(limit));
  }
}

}  // namespace relift
