#include <doctest.h>

#include <random>

#include "fuzzy/checks/oracles.hpp"
#include "fuzzy/convergence.hpp"
#include "fuzzy/error.hpp"

using namespace fuzzy;
namespace oracle = fuzzy::checks::oracle;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  std::vector<Rational> c;
  for (long x : xs) c.emplace_back(x);
  return RationalVector(std::move(c));
}

const SpaceSpec P2 = SpaceSpec::pointwise(2);
const SpaceSpec L = SpaceSpec::lex();

}  // namespace

TEST_CASE("sequence evaluation") {
  const auto s = SequenceSpec::closed_form(vec({1, 0}), vec({2, 2}), CoefficientKind::Harmonic);
  CHECK(s.at(P2, 4) == RationalVector{Rational(3, 2), Rational(1, 2)});
  CHECK_THROWS_AS(s.at(P2, 0), Error);
  const auto p = SequenceSpec::prefix({vec({0, 0}), vec({1, 1})});
  CHECK(p.at(P2, 2) == vec({1, 1}));
  CHECK_THROWS_AS(p.at(P2, 3), Error);
  const auto g = SequenceSpec::closed_form(vec({0, 0}), vec({8, 0}), CoefficientKind::Geometric, Rational(1, 2));
  CHECK(g.at(P2, 3) == vec({1, 0}));
  const auto abs_seq = SequenceSpec::unary(UnaryOp::Absolute, SequenceSpec::prefix({vec({-1, 2})}));
  CHECK(abs_seq.at(P2, 1) == vec({1, 2}));
}

TEST_CASE("dominating families") {
  const DominatingFamily h = DominatingFamily::harmonic(vec({2, 4}));
  CHECK(h.at(2) == vec({1, 2}));
  const DominatingFamily g = DominatingFamily::geometric(vec({4, 0}), Rational(1, 2));
  CHECK(g.at(2) == vec({1, 0}));
  CHECK((h + g).at(2) == vec({2, 2}));
  CHECK(h.scaled(Rational(0)).identically_zero());
  CHECK_NOTHROW(validate_family(P2, h));
  CHECK_THROWS_AS(validate_family(P2, DominatingFamily::harmonic(vec({-1, 0}))), Error);
  CHECK_THROWS_AS(validate_family(P2, DominatingFamily::geometric(vec({1, 0}), Rational(1))), Error);
  CHECK_THROWS_AS(validate_family(L, DominatingFamily::harmonic(vec({1, 0}))), Error);
  CHECK_NOTHROW(validate_family(L, DominatingFamily::harmonic(vec({0, 1}))));
}

TEST_CASE("certificates") {
  const RationalVector x = vec({1, -1});
  const RationalVector v = vec({2, 3});
  const auto harmonic = SequenceSpec::closed_form(x, v, CoefficientKind::Harmonic);
  for (std::size_t horizon : {1u, 16u, 128u}) {
    CHECK(check_convergence_certificate(P2, harmonic, x, DominatingFamily::harmonic(v), horizon).accepted());
  }
  const auto constant = SequenceSpec::prefix({}, x);
  CHECK(check_convergence_certificate(P2, constant, x, DominatingFamily::geometric(v, Rational(1, 2))).accepted());

  const auto offset = SequenceSpec::closed_form(x, v, CoefficientKind::Constant);
  const CertificateReport r = check_convergence_certificate(P2, offset, x, DominatingFamily::harmonic(v));
  CHECK_FALSE(r.accepted());
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().n == 2);
  CHECK(r.violations.size() == kDefaultHorizon - 1);
  CHECK_THROWS_AS(check_convergence_certificate(P2, harmonic, x, DominatingFamily::harmonic(v), 0), Error);
}

TEST_CASE("monotone limits") {
  const RationalVector x = vec({1, 1});
  const RationalVector v = vec({1, 2});
  const auto rising = SequenceSpec::closed_form(x, -v, CoefficientKind::Harmonic);
  CHECK(check_monotone_limit(P2, rising, x, kDefaultHorizon, DominatingFamily::harmonic(v)).accepted());
  CHECK(check_monotone_limit(P2, SequenceSpec::prefix({}, x), x).accepted());
  CHECK_FALSE(check_monotone_limit(P2, SequenceSpec::prefix({}, x), x + v).accepted());
  try {
    check_monotone_limit(P2, SequenceSpec::closed_form(x, v, CoefficientKind::Alternating), x);
    FAIL("oscillation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMonotone);
    CHECK(std::string(e.what()).find("not increasing at index 2") != std::string::npos);
  }
}

TEST_CASE("order closedness of bands") {
  const Handle band = Handle::pointwise(2, {1});
  const auto seq = SequenceSpec::closed_form(vec({1, 0}), vec({-1, 0}), CoefficientKind::Harmonic);
  const ClosednessVerdict v = check_order_closed_under(P2, band, seq, vec({1, 0}), DominatingFamily::harmonic(vec({1, 0})));
  CHECK(v.limit_in_handle);
  CHECK(v.certificate.accepted());
  std::mt19937_64 rng(1);
  for (const SpaceSpec& s : {P2, L}) {
    for (const Handle& h : all_handles(s)) {
      const RationalVector y = oracle::random_member(rng, s, h);
      const auto constant = SequenceSpec::prefix({}, y);
      RationalVector base = s.zero();
      base[1] = 1;
      CHECK(check_order_closed_under(s, h, constant, y, DominatingFamily::harmonic(base)).limit_in_handle);
    }
  }
}

TEST_CASE("limit laws") {
  const RationalVector x = vec({1, -2});
  const RationalVector y = vec({0, 3});
  const RationalVector v = vec({1, 1});
  const CertifiedSequence first{SequenceSpec::closed_form(x, v, CoefficientKind::Harmonic), x,
                                DominatingFamily::harmonic(v)};
  const CertifiedSequence second{SequenceSpec::closed_form(y, v, CoefficientKind::AlternatingHarmonic), y,
                                 DominatingFamily::harmonic(v)};
  const LimitLawReport r = check_limit_laws(P2, first, second, Rational(1), Rational(1));
  CHECK(r.all_accepted());
  REQUIRE(r.checks.size() == 6);
  CHECK(r.checks[0].derived.limit == x + y);
  for (const auto& law : r.checks) {
    if (law.law == "positive part") CHECK(law.derived.limit == oracle::max_of(P2, x, P2.zero()));
    if (law.law == "absolute value") CHECK(law.derived.limit == oracle::magnitude(P2, x));
  }
  const LimitLawReport reduced = check_limit_laws(P2, first, second, Rational(1), Rational(0));
  CHECK(reduced.checks[0].derived.limit == x);
  CHECK(reduced.checks[0].report.accepted());

  const CertifiedSequence wrong{first.sequence, x + v, first.family};
  CHECK_THROWS_AS(check_limit_laws(P2, wrong, second, Rational(1), Rational(1)), Error);
}
