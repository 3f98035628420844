#include <doctest.h>

#include <random>

#include "fuzzy/checks/oracles.hpp"
#include "fuzzy/checks/suite.hpp"
#include "fuzzy/error.hpp"

using namespace fuzzy;
using namespace fuzzy::checks;

TEST_CASE("every suite passes with a small case count") {
  const SuiteOptions options{7, 40, 32};
  for (const auto& name : suite_names()) {
    const SuiteResult r = run_suite(name, options);
    CHECK_MESSAGE(r.passed(), format_suite(r));
    CHECK_FALSE(r.checks.empty());
  }
  CHECK_THROWS_AS(run_suite("nonsense", options), Error);
}

TEST_CASE("suite output is a function of the seed") {
  const SuiteResult a = run_suite("riesz", {3, 50, 16});
  const SuiteResult b = run_suite("riesz", {3, 50, 16});
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(format_suite(a) == format_suite(b));
}

TEST_CASE("failing checks record the first counterexample and survive exceptions") {
  SuiteResult suite{"demo", {}};
  {
    Check c(suite, "demo.check", "demo", 1);
    c.expect(true, [] { return std::string("unused"); });
    c.expect(false, [] { return std::string("first"); });
    c.expect(false, [] { return std::string("second"); });
    c.run([](std::string& d) -> bool {
      d = "thrown";
      fail(ErrorCode::SpecError, "boom");
    });
  }
  const CheckResult* r = suite.find("demo.check");
  REQUIRE(r != nullptr);
  CHECK(r->cases == 4);
  CHECK(r->failures == 3);
  CHECK(r->first_counterexample == "first");
  CHECK_FALSE(suite.passed());
}

TEST_CASE("oracles on hand-checked inputs") {
  namespace o = fuzzy::checks::oracle;
  const SpaceSpec P2 = SpaceSpec::pointwise(2);
  const SpaceSpec L = SpaceSpec::lex();
  const RationalVector a{Rational(1), Rational(-2)};
  const RationalVector b{Rational(0), Rational(5)};
  CHECK(o::max_of(P2, a, b) == RationalVector{Rational(1), Rational(5)});
  CHECK(o::min_of(L, a, b) == b);
  CHECK(o::magnitude(P2, a) == RationalVector{Rational(1), Rational(2)});
  CHECK(o::orthogonal(P2, RationalVector{Rational(1), Rational(0)}, RationalVector{Rational(0), Rational(3)}));
  CHECK_FALSE(o::orthogonal(L, RationalVector{Rational(0), Rational(1)}, RationalVector{Rational(1), Rational(0)}));

  const std::vector<RationalVector> D{RationalVector{Rational(1), Rational(0)}};
  CHECK(o::lambda_search(P2, D, RationalVector{Rational(-7, 2), Rational(0)}));
  CHECK_FALSE(o::lambda_search(P2, D, RationalVector{Rational(0), Rational(1, 100)}));
  CHECK(o::stabilization(P2, D, RationalVector{Rational(9), Rational(0)}) == o::Stabilization::Member);

  std::mt19937_64 rng(2);
  const MembershipMatrix m = random_foset(rng);
  for (int i = 0; i < 20; ++i) CHECK_FALSE(validate_fuzzy_order(o::mutate(rng, m).matrix).is_fuzzy_order());
}
