#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relift/axiom_check.hpp"

namespace relift {

/// Outcome of one named property sweep inside a theorem suite.
struct PropertyResult {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::uint64_t instances_checked = 0;
  std::uint64_t instances_skipped = 0;
  /// First counterexample in enumeration order, or an observational note.
  std::string detail;
};

/// One suite of property sweeps over a common base bound.
struct SuiteReport {
  std::string suite;
  std::size_t bound = 0;
  std::vector<PropertyResult> properties;

  /// No property failed; skipped properties do not fail a suite.
  bool all_pass() const;
  const PropertyResult* find(const std::string& name) const;
};

/// Suite names accepted by run_suite, in report order.
const std::vector<std::string>& theorem_suites();

/// Runs one suite.  bound 0 selects the suite's native bound: 3 for
/// barr-minimal, otherwise 2.  Within a suite some sweeps adjust the bound
/// themselves: cospan raises powerset sweeps by one (capped at 3) and
/// distlaw-bijection drops the sixteen guard-family laws by one.
SuiteReport run_suite(const std::string& suite, std::size_t bound = 0);

/// Every suite in canonical order at the same requested bound.
std::vector<SuiteReport> run_all_suites(std::size_t bound = 0);

}  // namespace relift
