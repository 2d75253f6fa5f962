#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qca {

struct SuiteOptions {
  std::size_t cases = 100;
  std::uint64_t seed = 20240601;
  std::size_t max_steps = 6;
};

struct SuiteReport {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// One line per failing case.
  std::vector<std::string> failures;

  bool ok() const { return failed == 0 && passed > 0; }
};

/// involutivity, epsilon-independence, quasi-commutation, bar, grading,
/// laurent, cartan-identities, quasi-commutator.
const std::vector<std::string>& suite_names();

/// Runs one named property suite over the reproducible corpus. Throws
/// PreconditionViolation for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

} // namespace qca
