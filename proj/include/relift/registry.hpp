#pragma once

#include <string>
#include <vector>

#include "relift/lifting.hpp"

namespace relift {

/// A registry entry.  Informational entries are constructible and reportable
/// but excluded from minimality sweeps and from claims quantified over
/// "every registered lifting" (they carry no a-priori axiom verdict).
struct RegisteredLifting {
  LiftingPtr lifting;
  bool informational = false;
};

/// The fixed lifting family for one functor, by functor name ("P", "N", "M",
/// "Id").  Unknown names are a contract violation.
std::vector<RegisteredLifting> lifting_registry(const std::string& functor_name);

/// Functor names that have a registry, in report order.
const std::vector<std::string>& registry_functor_names();

}  // namespace relift
