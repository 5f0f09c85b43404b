#pragma once
/* Randomized property suite.
 *
 * Each property draws fresh elements from a per-property, per-trial stream
 * derived from the master seed, so runs are reproducible and reordering one
 * property never disturbs another.  Conditional properties count trials whose
 * premise never triggered as skipped rather than passed.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace iwa {

struct SuiteConfig {
  std::uint64_t p = 5;
  int precision = 20;    // coefficient ring Z/p^precision
  int n_max = 3;         // finite levels exercised, requires p^n_max <= degree_bound
  int degree_bound = 256;
  int trials = 100;      // base count; a few properties scale it up
  std::uint64_t seed = 2024;
};

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  int skipped = 0;
  std::string first_failure;  // empty when clean

  bool pass() const noexcept { return failures == 0; }
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<PropertyResult> properties;

  bool all_pass() const noexcept {
    for (const auto& r : properties)
      if (!r.pass()) return false;
    return true;
  }
};

SuiteReport run_suite(const SuiteConfig& config);

}  // namespace iwa
