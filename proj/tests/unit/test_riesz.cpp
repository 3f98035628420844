#include <doctest.h>

#include <random>

#include "fuzzy/checks/oracles.hpp"
#include "fuzzy/error.hpp"
#include "fuzzy/riesz.hpp"

using namespace fuzzy;
namespace oracle = fuzzy::checks::oracle;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  std::vector<Rational> c;
  for (long x : xs) c.emplace_back(x);
  return RationalVector(std::move(c));
}

const SpaceSpec P2 = SpaceSpec::pointwise(2);
const SpaceSpec P3 = SpaceSpec::pointwise(3);
const SpaceSpec L = SpaceSpec::lex();

}  // namespace

TEST_CASE("vector text round trip") {
  CHECK(parse_vector("(1, -2/3, 0)") == RationalVector{Rational(1), Rational(-2, 3), Rational(0)});
  CHECK(parse_vector("[1,2]") == vec({1, 2}));
  CHECK(parse_vector("3,4") == vec({3, 4}));
  CHECK(format_vector(RationalVector{Rational(1), Rational(-2, 3)}) == "(1, -2/3)");
  CHECK_THROWS_AS(parse_vector("(1, x)"), Error);
}

TEST_CASE("space validation") {
  CHECK_THROWS_AS(SpaceSpec::pointwise(2, Rational(1, 2)), Error);
  CHECK_THROWS_AS(SpaceSpec::pointwise(0), Error);
  CHECK_THROWS_AS(SpaceSpec(Family::Lex, 3, Rational(2, 3)), Error);
  CHECK_NOTHROW(SpaceSpec::pointwise(1, Rational(1)));
  CHECK_THROWS_AS(mu(P2, vec({1, 2, 3}), vec({1, 2})), Error);
}

TEST_CASE("grades of the two-level families") {
  CHECK(mu(P2, vec({0, 0}), vec({1, 2})) == Grade(Rational(2, 3)));
  CHECK(mu(P2, vec({3, 4}), vec({3, 4})) == Grade::one());
  CHECK(mu(P2, vec({1, 0}), vec({0, 1})).is_zero());
  CHECK(mu(L, vec({-1, 100}), vec({0, 0})) == Grade(Rational(2, 3)));
  CHECK(mu(L, vec({0, 0}), vec({-1, 100})).is_zero());
  CHECK(mu(SpaceSpec::pointwise(2, Rational(4, 5)), vec({0, 0}), vec({1, 1})) == Grade(Rational(4, 5)));
}

TEST_CASE("lattice operations agree with coordinate oracles") {
  CHECK(join(P2, vec({1, -2}), vec({0, 5})) == vec({1, 5}));
  CHECK(join(P2, vec({1, -2}), vec({0, 5})) == oracle::max_of(P2, vec({1, -2}), vec({0, 5})));
  CHECK(join(L, vec({-1, 100}), vec({1, -100})) == vec({1, -100}));
  CHECK(meet(L, vec({-1, 100}), vec({1, -100})) == vec({-1, 100}));

  const RationalVector x = vec({1, -2, 0});
  CHECK(pos_part(P3, x) == vec({1, 0, 0}));
  CHECK(neg_part(P3, x) == vec({0, 2, 0}));
  CHECK(abs(P3, x) == vec({1, 2, 0}));
  CHECK(pos_part(P3, P3.zero()) == P3.zero());
  CHECK(neg_part(P3, P3.zero()) == P3.zero());
  CHECK(abs(P3, P3.zero()) == P3.zero());

  const RationalVector y = vec({-1, 100});
  CHECK(pos_part(L, y) == vec({0, 0}));
  CHECK(neg_part(L, y) == vec({1, -100}));
  CHECK(abs(L, y) == vec({1, -100}));
}

TEST_CASE("riesz decomposition examples satisfy both postconditions") {
  const std::vector<RationalVector> ys{vec({2, 1}), vec({2, -1})};
  const DecompositionResult r = riesz_decompose(P2, vec({3, 0}), ys);
  REQUIRE(r.parts.size() == 2);
  CHECK(r.parts[0] == vec({2, 0}));
  CHECK(r.parts[1] == vec({1, 0}));
  for (std::size_t i = 0; i < 2; ++i) CHECK(oracle::below(P2, oracle::magnitude(P2, r.parts[i]), oracle::magnitude(P2, ys[i])));

  const std::vector<RationalVector> units{vec({1, 0}), vec({0, 1})};
  CHECK(riesz_decompose(P2, vec({1, 1}), units).parts == units);
  CHECK(riesz_decompose(P2, vec({1, -1}), std::vector<RationalVector>{vec({2, 2})}).parts ==
        std::vector<RationalVector>{vec({1, -1})});
  try {
    riesz_decompose(P2, vec({3, 3}), units);
    FAIL("undominated input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDominated);
  }
}

TEST_CASE("disjointness") {
  CHECK(is_disjoint(P2, vec({1, 0}), vec({0, 1})));
  CHECK_FALSE(is_disjoint(P2, vec({1, 1}), vec({0, 1})));
  CHECK_FALSE(is_disjoint(L, vec({0, 1}), vec({1, 0})));
}

TEST_CASE("archimedean evidence") {
  const BoundednessReport p = is_nx_bounded(P2, vec({1, 0}), vec({100, 100}), 200);
  CHECK_FALSE(p.all_checks_pass);
  CHECK(p.first_failure == std::size_t{101});
  CHECK_FALSE(p.closed_form_bounded);

  CHECK(is_nx_bounded(P2, P2.zero(), P2.zero(), 10).all_checks_pass);
  const BoundednessReport l = is_nx_bounded(L, vec({0, 1}), vec({1, 0}), 500);
  CHECK(l.all_checks_pass);
  CHECK(l.closed_form_bounded);

  CHECK(infimum_of_scaled(P2, vec({2, 4})) == P2.zero());
  CHECK(infimum_of_scaled(P2, P2.zero()) == P2.zero());
  CHECK_FALSE(infimum_of_scaled(L, vec({1, 0})).has_value());
  CHECK_THROWS_AS(infimum_of_scaled(P2, vec({-1, 0})), Error);

  CHECK(space_properties(P3).archimedean);
  CHECK(space_properties(SpaceSpec::pointwise(1)).archimedean);
  const SpaceProperties lex = space_properties(L);
  CHECK_FALSE(lex.archimedean);
  REQUIRE(lex.witness.has_value());
  CHECK(lex.witness->first == vec({0, 1}));
  CHECK(lex.witness->second == vec({1, 0}));
}

TEST_CASE("property: lattice laws on random vectors in both families") {
  std::mt19937_64 rng(5);
  for (const SpaceSpec& s : {P3, L}) {
    for (int i = 0; i < 300; ++i) {
      const RationalVector x = random_vector(rng, s.dimension());
      const RationalVector y = random_vector(rng, s.dimension());
      CHECK(join(s, x, y) == oracle::max_of(s, x, y));
      CHECK(meet(s, x, y) == oracle::min_of(s, x, y));
      CHECK(x + y == join(s, x, y) + meet(s, x, y));
      CHECK(x == pos_part(s, x) - neg_part(s, x));
      CHECK(abs(s, x) == pos_part(s, x) + neg_part(s, x));
      CHECK(is_disjoint(s, pos_part(s, x), neg_part(s, x)));
      CHECK(precedes(s, abs(s, x + y), abs(s, x) + abs(s, y)));
      CHECK(is_positive(s, random_positive(rng, s)));
    }
  }
}
