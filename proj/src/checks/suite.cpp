#include "fuzzy/checks/suite.hpp"

#include <exception>

#include "fuzzy/error.hpp"

namespace fuzzy::checks {

std::size_t SuiteResult::failures() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.failures;
  return total;
}

const CheckResult* SuiteResult::find(std::string_view tag) const {
  for (const auto& c : checks) {
    if (c.tag == tag) return &c;
  }
  return nullptr;
}

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Check::Check(SuiteResult& suite, std::string tag, std::string description, std::uint64_t seed)
    : suite_(suite), index_(suite.checks.size()) {
  const std::uint64_t mixed = fnv1a(tag);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(mixed), static_cast<std::uint32_t>(mixed >> 32)};
  rng_.seed(seq);
  suite.checks.push_back(CheckResult{std::move(tag), std::move(description), 0, 0, std::nullopt});
}

CheckResult& Check::result() { return suite_.checks[index_]; }

void Check::expect(bool ok, const std::function<std::string()>& describe) {
  CheckResult& r = result();
  ++r.cases;
  if (ok) return;
  ++r.failures;
  if (!r.first_counterexample) r.first_counterexample = describe();
}

void Check::run(const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const Error& e) {
    detail += std::string(detail.empty() ? "" : "; ") + "unexpected " + std::string(to_string(e.code())) + ": " +
              e.what();
  } catch (const std::exception& e) {
    detail += std::string(detail.empty() ? "" : "; ") + "unexpected exception: " + e.what();
  }
  expect(ok, [&] { return detail; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"foset", "riesz", "ideals", "bands", "projections", "convergence"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "foset") return run_foset_suite(options);
  if (name == "riesz") return run_riesz_suite(options);
  if (name == "ideals") return run_ideals_suite(options);
  if (name == "bands") return run_bands_suite(options);
  if (name == "projections") return run_projections_suite(options);
  if (name == "convergence") return run_convergence_suite(options);
  fail(ErrorCode::SpecError, "unknown suite \"" + std::string(name) + "\"");
}

Json to_json(const SuiteResult& suite) {
  Json checks = Json::array();
  for (const auto& c : suite.checks) {
    Json entry{{"tag", c.tag}, {"description", c.description}, {"cases", c.cases}, {"failures", c.failures}};
    entry["first_counterexample"] = c.first_counterexample ? Json(*c.first_counterexample) : Json(nullptr);
    checks.push_back(std::move(entry));
  }
  return Json{{"suite", suite.name}, {"failures", suite.failures()}, {"checks", checks}};
}

std::string format_suite(const SuiteResult& suite) {
  std::string out = "suite " + suite.name + ": " + (suite.passed() ? "ok" : "FAILED") + "\n";
  for (const auto& c : suite.checks) {
    out += "  " + std::string(c.failures == 0 ? "ok  " : "FAIL") + "  " + c.tag + "  (" +
           std::to_string(c.cases) + " cases, " + std::to_string(c.failures) + " failures)  " + c.description + "\n";
    if (c.first_counterexample) out += "        counterexample: " + *c.first_counterexample + "\n";
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng, int max_numerator, int max_denominator) {
  std::uniform_int_distribution<int> num(-max_numerator, max_numerator);
  std::uniform_int_distribution<int> den(1, max_denominator);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Rational random_unit_fraction(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(1, 6);
  const int d = den(rng);
  std::uniform_int_distribution<int> num(0, d);
  Rational r(num(rng), d);
  r.canonicalize();
  return r;
}

std::size_t random_index(std::mt19937_64& rng, std::size_t bound) {
  std::uniform_int_distribution<std::size_t> d(0, bound - 1);
  return d(rng);
}

bool coin(std::mt19937_64& rng, double p) {
  std::bernoulli_distribution d(p);
  return d(rng);
}

}  // namespace fuzzy::checks
