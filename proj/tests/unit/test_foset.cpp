#include <doctest.h>

#include <random>

#include "fuzzy/checks/oracles.hpp"
#include "fuzzy/error.hpp"
#include "fuzzy/foset.hpp"

using namespace fuzzy;
namespace oracle = fuzzy::checks::oracle;

namespace {

Grade g(long p, long q = 1) { return Grade(Rational(p, q)); }

MembershipMatrix make(std::vector<std::string> labels, std::vector<GradeEntry> entries) {
  return MembershipMatrix(std::move(labels), entries);
}

MembershipMatrix chain3() {
  return make({"a", "b", "c"}, {{"a", "b", g(2, 3)}, {"b", "c", g(2, 3)}, {"a", "c", g(2, 3)}});
}

MembershipMatrix antichain2() { return make({"a", "b"}, {}); }

MembershipMatrix vee() { return make({"a", "b", "c"}, {{"a", "c", g(2, 3)}, {"b", "c", g(2, 3)}}); }

MembershipMatrix diamond() {
  return make({"bot", "l", "r", "top"}, {{"bot", "l", g(2, 3)},
                                         {"bot", "r", g(2, 3)},
                                         {"bot", "top", g(2, 3)},
                                         {"l", "top", g(2, 3)},
                                         {"r", "top", g(2, 3)}});
}

ElementSet ids(const MembershipMatrix& m, std::vector<std::string> labels) { return m.indices_of(labels); }

}  // namespace

TEST_CASE("three-chain validates and every triple satisfies the axioms by enumeration") {
  const MembershipMatrix m = chain3();
  CHECK(validate_fuzzy_order(m).is_fuzzy_order());
  for (ElementIndex x = 0; x < 3; ++x) {
    CHECK(m.grade(x, x) == Grade::one());
    for (ElementIndex y = 0; y < 3; ++y) {
      if (x != y) CHECK(m.grade(x, y).value() + m.grade(y, x).value() <= 1);
      for (ElementIndex z = 0; z < 3; ++z) {
        CHECK(m.grade(x, z) >= std::min(m.grade(x, y), m.grade(y, z)));
      }
    }
  }
}

TEST_CASE("axiom violations are reported with their witnesses") {
  SUBCASE("reflexivity") {
    const auto m = chain3().with_grade(0, 0, g(9, 10));
    const AxiomReport r = validate_fuzzy_order(m);
    REQUIRE(r.reflexivity_violations.size() == 1);
    CHECK(m.label(r.reflexivity_violations[0]) == "a");
  }
  SUBCASE("antisymmetry") {
    const auto m = make({"a", "b"}, {{"a", "b", g(4, 5)}, {"b", "a", g(4, 5)}});
    const AxiomReport r = validate_fuzzy_order(m);
    REQUIRE(r.antisymmetry_violations.size() == 1);
    CHECK(r.antisymmetry_violations[0].grade_sum == Rational(8, 5));
  }
  SUBCASE("transitivity") {
    const auto m = make({"a", "b", "c"}, {{"a", "b", g(9, 10)}, {"b", "c", g(9, 10)}, {"a", "c", g(3, 10)}});
    const AxiomReport r = validate_fuzzy_order(m);
    REQUIRE(r.transitivity_violations.size() == 1);
    const auto& v = r.transitivity_violations[0];
    CHECK(m.label(v.x) == "a");
    CHECK(m.label(v.y) == "b");
    CHECK(m.label(v.z) == "c");
    CHECK(v.required == g(9, 10));
    CHECK(v.actual == g(3, 10));
  }
}

TEST_CASE("bound sets follow the two-case definition") {
  const MembershipMatrix m = chain3();
  const FuzzySubset up = upper_bound_set(m, ids(m, {"a", "b"}));
  CHECK(up[2] == g(2, 3));
  CHECK(up[0].is_zero());
  CHECK(up[1] == g(2, 3));
  CHECK(lower_bound_set(m, ids(m, {"b", "c"}))[0] == g(2, 3));

  const MembershipMatrix anti = antichain2();
  const FuzzySubset anti_up = upper_bound_set(anti, ids(anti, {"a", "b"}));
  const FuzzySubset anti_down = lower_bound_set(anti, ids(anti, {"a", "b"}));
  CHECK(anti_up.support().empty());
  CHECK(anti_down.support().empty());

  const FuzzySubset single = upper_bound_set(m, ids(m, {"b"}));
  for (ElementIndex y = 0; y < 3; ++y) {
    CHECK(single[y] == (m.grade(1, y).holds() ? m.grade(1, y) : Grade::zero()));
  }
}

TEST_CASE("suprema and infima match the brute-force candidate scan") {
  const MembershipMatrix m = chain3();
  CHECK(supremum(m, ids(m, {"a", "b"})) == ElementIndex{1});
  CHECK(infimum(m, ids(m, {"b", "c"})) == ElementIndex{1});
  CHECK(supremum(m, ids(m, {"c"})) == ElementIndex{2});
  CHECK(infimum(m, ids(m, {"a"})) == ElementIndex{0});
  CHECK_FALSE(supremum(antichain2(), ElementSet{0, 1}).has_value());
  CHECK_FALSE(infimum(antichain2(), ElementSet{0, 1}).has_value());

  const MembershipMatrix v = vee();
  CHECK(supremum(v, ElementSet{0, 1}) == ElementIndex{2});
  CHECK(join(v, 0, 1) == ElementIndex{2});
  CHECK_FALSE(meet(v, 0, 1).has_value());

  const auto scan = oracle::extremum_candidates(v, ElementSet{0, 1}, true);
  CHECK(scan == std::vector<ElementIndex>{2});
  CHECK_THROWS_AS(supremum(m, ElementSet{}), Error);
}

TEST_CASE("join and meet read the order off comparable pairs") {
  const MembershipMatrix m = chain3();
  for (ElementIndex x = 0; x < 3; ++x) {
    CHECK(join(m, x, x) == x);
    CHECK(meet(m, x, x) == x);
    for (ElementIndex y = 0; y < 3; ++y) {
      if (m.precedes(x, y)) {
        CHECK(join(m, x, y) == y);
        CHECK(meet(m, x, y) == x);
      }
    }
  }
}

TEST_CASE("lattice and directedness examples") {
  CHECK(is_lattice(chain3()));
  CHECK(is_lattice(diamond()));
  CHECK_FALSE(is_lattice(antichain2()));
  CHECK_FALSE(is_lattice(vee()));

  const MembershipMatrix m = chain3();
  CHECK(is_directed(m, ElementSet{0, 1, 2}, Direction::Both));
  CHECK_FALSE(is_directed(antichain2(), ElementSet{0, 1}, Direction::Right));
  CHECK(is_directed(vee(), ElementSet{0, 1, 2}, Direction::Right));
  CHECK_FALSE(is_directed(vee(), ElementSet{0, 1, 2}, Direction::Left));
  CHECK_FALSE(is_directed(m, ElementSet{}, Direction::Right));
  CHECK_THROWS_AS(is_lattice(chain3().with_grade(0, 0, g(1, 2))), Error);
}

TEST_CASE("carrier errors") {
  CHECK_THROWS_AS(make({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(make({"a"}, {{"a", "z", g(1)}}), Error);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("e" + std::to_string(i));
  try {
    make(many, {});
    FAIL("carrier cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CarrierTooLarge);
  }
}

TEST_CASE("property: generated fosets validate and their lattices satisfy the all-subsets definition") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    FosetGeneratorOptions options;
    options.graded_edges = i % 2 == 1;
    const MembershipMatrix m = random_foset(rng, options);
    REQUIRE(validate_fuzzy_order(m).is_fuzzy_order());
    if (m.size() <= 5) CHECK(is_lattice(m) == oracle::all_subsets_bounded(m));
  }
}

TEST_CASE("property: every single-entry mutation is caught") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const MembershipMatrix m = random_foset(rng);
    const oracle::Mutation mutation = oracle::mutate(rng, m);
    CHECK_FALSE(validate_fuzzy_order(mutation.matrix).is_fuzzy_order());
  }
}

TEST_CASE("property: max-min closure is transitive and keeps every original grade") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const MembershipMatrix m = random_foset(rng, {.min_size = 2, .max_size = 6, .graded_edges = true});
    const MembershipMatrix c = max_min_closure(m);
    CHECK(validate_fuzzy_order(c).transitivity_violations.empty());
    for (ElementIndex x = 0; x < m.size(); ++x) {
      for (ElementIndex y = 0; y < m.size(); ++y) CHECK(c.grade(x, y) >= m.grade(x, y));
    }
  }
}
