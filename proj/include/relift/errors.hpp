#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace relift {

/// Thrown when an operation is invoked outside its contract: carrier
/// mismatches, values that are not drawn from the expected set, malformed
/// names or documents.
class contract_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an enumeration would exceed the configured carrier limit.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency check fails.  Reaching this indicates
/// a broken functor or lifting instance, not bad user input.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Largest enumeration a single carrier construction may perform.  Defaults
/// to 65536; the RELIFT_CARRIER_LIMIT environment variable overrides the
/// default at startup and set_carrier_limit overrides it programmatically.
std::uint64_t carrier_limit();
void set_carrier_limit(std::uint64_t limit);

/// Throws resource_error if `needed` exceeds the active limit.  A nullopt
/// cost means the size does not even fit in 64 bits.
void guard_carrier(std::optional<std::uint64_t> needed, const std::string& what);

}  // namespace relift
