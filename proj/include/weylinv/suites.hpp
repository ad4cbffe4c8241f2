#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylinv/errata.hpp"
#include "weylinv/report.hpp"

namespace weylinv {

struct SuiteOptions {
  std::uint32_t prime = 3;
  /// Errata consulted for failing checks; nullptr disables them.
  const ErrataSet* errata = nullptr;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// Cohomological bound for the dimension-oracle comparison.
  int max_degree = 40;
  /// Cohomological bound for series comparisons.
  int series_degree = 100;
  /// Invariance suite: elements and reflections to test.  Empty elements
  /// means the thirteen generators.
  std::vector<std::string> elements;
  std::vector<int> reflections{1, 2, 3, 4, 5, 6};
};

/// Suites in the order `all` runs them.
const std::vector<std::string>& suite_names();
/// Accepts the names above, "all" and descriptive aliases; nullopt when
/// unknown.
std::optional<std::string> canonical_suite(const std::string& name);

/// Runs one suite, or every suite for "all".  Checks run on opts.jobs
/// threads; results keep declaration order.
Report run_suite(const std::string& name, const SuiteOptions& opts);

struct ErratumSuggestion {
  std::string id;
  std::string printed;
  std::optional<Repair> repair;
};

/// For every check of the suite that fails as displayed, the oracle's
/// proposed correction (if one is found).
std::vector<ErratumSuggestion> suggest_errata(const std::string& name, const SuiteOptions& opts);

}  // namespace weylinv
