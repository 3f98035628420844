#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzy/io.hpp"

namespace fuzzy::checks {

struct SuiteOptions {
  std::uint64_t seed = 42;
  /// Random cases per randomized check. Exhaustive checks ignore it.
  std::size_t cases = 500;
  std::size_t horizon = kDefaultHorizon;
};

struct CheckResult {
  std::string tag;
  std::string description;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_counterexample;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  const CheckResult* find(std::string_view tag) const;
};

/// Accumulates one check. Each check draws from its own generator, seeded
/// from the suite seed and the tag, so results do not depend on check order.
class Check {
 public:
  Check(SuiteResult& suite, std::string tag, std::string description, std::uint64_t seed);

  std::mt19937_64& rng() { return rng_; }

  /// Records one case. `describe` runs only for the first failure.
  void expect(bool ok, const std::function<std::string()>& describe);
  /// Records one case that must not throw; exceptions count as failures.
  void run(const std::function<bool(std::string&)>& body);

 private:
  CheckResult& result();

  SuiteResult& suite_;
  std::size_t index_;
  std::mt19937_64 rng_;
};

SuiteResult run_foset_suite(const SuiteOptions& options);
SuiteResult run_riesz_suite(const SuiteOptions& options);
SuiteResult run_ideals_suite(const SuiteOptions& options);
SuiteResult run_bands_suite(const SuiteOptions& options);
SuiteResult run_projections_suite(const SuiteOptions& options);
SuiteResult run_convergence_suite(const SuiteOptions& options);

const std::vector<std::string>& suite_names();
/// Throws SpecError on an unknown suite name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

Json to_json(const SuiteResult& suite);
std::string format_suite(const SuiteResult& suite);

/// Random exact-rational helpers shared by the suites.
Rational random_rational(std::mt19937_64& rng, int max_numerator = 10, int max_denominator = 3);
Rational random_unit_fraction(std::mt19937_64& rng);  // in [0, 1]
std::size_t random_index(std::mt19937_64& rng, std::size_t bound);
bool coin(std::mt19937_64& rng, double p = 0.5);

}  // namespace fuzzy::checks
