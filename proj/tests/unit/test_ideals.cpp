#include <doctest.h>

#include <random>

#include "fuzzy/checks/oracles.hpp"
#include "fuzzy/error.hpp"
#include "fuzzy/ideals.hpp"

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

Handle support(std::size_t n, std::vector<std::size_t> s) { return Handle::pointwise(n, std::move(s)); }

}  // namespace

TEST_CASE("handle construction and formatting") {
  CHECK(format_handle(support(3, {3, 1, 3})) == "pointwise support {1,3}");
  CHECK(format_handle(Handle::lex(LexKind::Axis)) == "lex axis");
  CHECK(Handle::zero(P3).is_zero());
  CHECK(Handle::full(L).is_full());
  CHECK_THROWS_AS(support(3, {4}), Error);
  CHECK_THROWS_AS(check_handle(P3, Handle::lex(LexKind::Axis)), Error);
  CHECK(all_handles(P3).size() == 8);
  CHECK(all_handles(L).size() == 3);
}

TEST_CASE("solid hulls and solidity") {
  const std::vector<RationalVector> A{vec({2, 2})};
  CHECK(solid_hull_contains(P2, A, vec({1, -2})));
  CHECK(solid_hull_contains(P2, A, vec({2, 2})));
  CHECK_FALSE(solid_hull_contains(P2, std::vector<RationalVector>{vec({1, 0})}, vec({0, 1})));
  CHECK_FALSE(solid_hull_contains(P2, std::vector<RationalVector>{}, P2.zero()));

  CHECK(is_solid(P2, std::vector<RationalVector>{P2.zero()}).solid);
  const SolidityReport r = is_solid(P2, A);
  CHECK_FALSE(r.solid);
  REQUIRE(r.witness.has_value());
  CHECK(oracle::below(P2, oracle::magnitude(P2, r.witness->first), oracle::magnitude(P2, r.witness->second)));
  CHECK(r.witness->first != vec({2, 2}));
}

TEST_CASE("riesz subspaces") {
  CHECK(is_riesz_subspace(P3, std::vector<RationalVector>{vec({1, 0, 0}), vec({0, 0, 1})}).closed);
  CHECK(is_riesz_subspace(P3, std::vector<RationalVector>{vec({1, 1, 1})}).closed);
  const SubspaceReport r = is_riesz_subspace(P2, std::vector<RationalVector>{vec({1, -1})});
  CHECK_FALSE(r.closed);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->join == oracle::max_of(P2, r.witness->x, r.witness->y));
  CHECK_THROWS_AS(is_riesz_subspace(P2, std::vector<RationalVector>{vec({1, 1}), vec({2, 2})}), Error);
}

TEST_CASE("generated ideals agree with the lambda search") {
  const std::vector<RationalVector> D{vec({1, 0, 0}), vec({0, 0, 2})};
  const Handle h = ideal_generated(P3, D);
  CHECK(h == support(3, {1, 3}));
  CHECK(ideal_contains(P3, h, vec({3, 0, -1})));
  CHECK(oracle::lambda_search(P3, D, vec({3, 0, -1})));
  CHECK_FALSE(ideal_contains(P3, h, vec({0, 1, 0})));
  CHECK_FALSE(oracle::lambda_search(P3, D, vec({0, 1, 0})));
  for (const Handle& any : all_handles(P3)) CHECK(ideal_contains(P3, any, P3.zero()));

  CHECK(ideal_generated(P3, std::vector<RationalVector>{P3.zero()}).is_zero());
  CHECK(ideal_generated(L, std::vector<RationalVector>{vec({0, 5})}) == Handle::lex(LexKind::Axis));
  CHECK_THROWS_AS(ideal_generated(P3, std::vector<RationalVector>{}), Error);
}

TEST_CASE("generated bands agree with stabilization") {
  CHECK(band_generated(P2, std::vector<RationalVector>{vec({1, 0})}) == support(2, {1}));
  CHECK(band_generated(P2, std::vector<RationalVector>{P2.zero()}).is_zero());
  CHECK(band_generated(L, std::vector<RationalVector>{vec({1, 0})}) == Handle::full(L));

  const StabilizationTrace t = principal_band_contains(P2, vec({2, 1}), vec({3, 5}));
  CHECK(t.contained);
  CHECK(t.stabilization_index == std::size_t{5});
  CHECK(t.stable_value == vec({3, 5}));
  REQUIRE(t.sequence.size() >= 5);
  CHECK(t.sequence[0] == vec({2, 1}));
  CHECK(t.sequence[2] == vec({3, 3}));
  CHECK(t.sequence[4] == vec({3, 5}));
  CHECK(oracle::stabilized_supremum(P2, vec({2, 1}), vec({3, 5})) == vec({3, 5}));

  const StabilizationTrace capped = principal_band_contains(P2, vec({1, 0}), vec({3, 5}));
  CHECK_FALSE(capped.contained);
  CHECK(capped.stable_value == vec({3, 0}));
  CHECK(principal_band_contains(P2, vec({1, 0}), P2.zero()).contained);

  const StabilizationTrace axis = principal_band_contains(L, vec({0, 1}), vec({1, 0}));
  CHECK_FALSE(axis.contained);
  CHECK(oracle::stabilization(L, std::vector<RationalVector>{vec({0, 1})}, vec({1, 0})) ==
        oracle::Stabilization::NonMember);

  try {
    principal_band_contains(P2, vec({1, 1}), vec({1000, 1}), 10);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StabilizationOverflow);
  }
}

TEST_CASE("disjoint complements, density and handle arithmetic") {
  CHECK(disjoint_complement(P3, support(3, {1, 3})) == support(3, {2}));
  CHECK(disjoint_complement(P3, Handle::zero(P3)).is_full());
  CHECK(disjoint_complement(L, Handle::lex(LexKind::Axis)).is_zero());
  CHECK(disjoint_complement(P3, std::vector<RationalVector>{}).is_full());
  CHECK(disjoint_complement(P3, std::vector<RationalVector>{vec({0, 4, 0})}) == support(3, {1, 3}));

  CHECK(is_order_dense(P2, Handle::full(P2)));
  CHECK_FALSE(is_order_dense(P2, support(2, {1})));
  CHECK(is_order_dense(L, Handle::lex(LexKind::Axis)));

  CHECK(ideal_sum(P3, support(3, {1}), support(3, {2})) == support(3, {1, 2}));
  CHECK(ideal_intersection(P3, support(3, {1, 2}), support(3, {2, 3})) == support(3, {2}));
  for (const Handle& h : all_handles(P3)) CHECK(ideal_sum(P3, h, Handle::zero(P3)) == h);

  CHECK(is_direct_sum_decomposition(P3, support(3, {1, 3}), support(3, {2})));
  CHECK_FALSE(is_direct_sum_decomposition(P3, support(3, {1}), Handle::zero(P3)));
  CHECK_FALSE(is_direct_sum_decomposition(L, Handle::lex(LexKind::Axis), Handle::zero(L)));

  const auto split = split_into_sum(P3, support(3, {1, 3}), support(3, {2}), vec({5, 7, 2}));
  REQUIRE(split.has_value());
  CHECK(split->first == vec({5, 0, 2}));
  CHECK(split->second == vec({0, 7, 0}));
  CHECK_FALSE(split_into_sum(P3, support(3, {1}), support(3, {2}), vec({1, 1, 1})).has_value());
}

TEST_CASE("property: complement laws on every handle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const SpaceSpec s = SpaceSpec::pointwise(n);
    for (const Handle& h : all_handles(s)) {
      const Handle d = disjoint_complement(s, h);
      const Handle dd = disjoint_complement(s, d);
      CHECK(dd == h);
      CHECK(disjoint_complement(s, dd) == d);
      CHECK(is_direct_sum_decomposition(s, h, d));
    }
  }
  const Handle axis = Handle::lex(LexKind::Axis);
  CHECK(disjoint_complement(L, disjoint_complement(L, axis)) == Handle::full(L));
  CHECK(handle_includes(L, axis, Handle::full(L)));
}

TEST_CASE("property: membership matches the oracles on random members and non-members") {
  std::mt19937_64 rng(9);
  for (const Handle& h : all_handles(P3)) {
    const std::vector<RationalVector> D = oracle::members(rng, P3, h, 2);
    for (int i = 0; i < 50; ++i) {
      const RationalVector x = random_vector(rng, 3);
      CHECK(ideal_contains(P3, h, x) == oracle::lambda_search(P3, D, x));
      CHECK(ideal_contains(P3, h, x) == (oracle::stabilization(P3, D, x) == oracle::Stabilization::Member));
    }
  }
}
