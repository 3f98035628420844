#include <algorithm>

#include "fuzzy/checks/oracles.hpp"
#include "fuzzy/checks/suite.hpp"
#include "fuzzy/foset.hpp"

namespace fuzzy::checks {

namespace {

std::string describe_matrix(const MembershipMatrix& m) { return to_json(m).dump(); }

std::string labels_of(const MembershipMatrix& m, std::span<const ElementIndex> subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) out += (i ? "," : "") + m.label(subset[i]);
  return out + "}";
}

MembershipMatrix generated(std::mt19937_64& rng, std::size_t min_size, std::size_t max_size) {
  FosetGeneratorOptions options;
  options.min_size = min_size;
  options.max_size = max_size;
  options.graded_edges = coin(rng);
  options.edge_probability = 0.25 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng);
  return random_foset(rng, options);
}

std::vector<ElementIndex> random_subset(std::mt19937_64& rng, std::size_t n) {
  std::vector<ElementIndex> out;
  while (out.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) out.push_back(i);
    }
  }
  return out;
}

// Random lattices with at most five elements, drawn by rejection.
std::vector<MembershipMatrix> random_lattices(std::mt19937_64& rng, std::size_t count) {
  std::vector<MembershipMatrix> out;
  while (out.size() < count) {
    MembershipMatrix m = generated(rng, 1, 5);
    if (oracle::all_subsets_bounded(m)) out.push_back(std::move(m));
  }
  return out;
}

bool axis_reported(const AxiomReport& r, oracle::MutationKind kind) {
  switch (kind) {
    case oracle::MutationKind::Reflexivity: return !r.reflexivity_violations.empty();
    case oracle::MutationKind::Antisymmetry: return !r.antisymmetry_violations.empty();
    case oracle::MutationKind::Transitivity: return !r.transitivity_violations.empty();
  }
  return false;
}

}  // namespace

SuiteResult run_foset_suite(const SuiteOptions& options) {
  SuiteResult suite{"foset", {}};

  {
    Check c(suite, "foset.generated-orders-validate", "generated fosets of 2 to 8 elements satisfy all three axioms",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const MembershipMatrix m = generated(c.rng(), 2, 8);
      c.expect(validate_fuzzy_order(m).is_fuzzy_order(), [&] { return describe_matrix(m); });
    }
  }
  {
    Check c(suite, "foset.mutations-detected",
            "single-entry mutations breaking reflexivity, antisymmetry or transitivity are reported", options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const MembershipMatrix m = generated(c.rng(), 2, 8);
      const oracle::Mutation mut = oracle::mutate(c.rng(), m);
      const AxiomReport r = validate_fuzzy_order(mut.matrix);
      c.expect(!r.is_fuzzy_order() && axis_reported(r, mut.kind), [&] {
        return "mutated entry (" + mut.matrix.label(mut.from) + ", " + mut.matrix.label(mut.to) +
               ") not reported in " + describe_matrix(mut.matrix);
      });
    }
  }

  const std::size_t lattice_count = std::max<std::size_t>(200, options.cases / 2);
  std::vector<MembershipMatrix> lattices;
  {
    Check c(suite, "foset.extremum-unique",
            "exhaustive scans of every subset of small lattices find exactly one supremum and one infimum, "
            "matching the library",
            options.seed);
    lattices = random_lattices(c.rng(), lattice_count);
    for (const auto& m : lattices) {
      std::vector<ElementIndex> all(m.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      bool ok = true;
      std::string detail;
      for (unsigned bits = 1; bits < (1u << m.size()) && ok; ++bits) {
        std::vector<ElementIndex> subset;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (bits & (1u << i)) subset.push_back(i);
        }
        for (bool upward : {true, false}) {
          const auto candidates = oracle::extremum_candidates(m, subset, upward);
          const auto found = upward ? supremum(m, subset) : infimum(m, subset);
          if (candidates.size() != 1 || !found || *found != candidates.front()) {
            ok = false;
            detail = std::string(upward ? "supremum" : "infimum") + " of " + labels_of(m, subset) + " in " +
                     describe_matrix(m) + ": " + std::to_string(candidates.size()) + " candidates";
            break;
          }
        }
      }
      c.expect(ok, [&] { return detail; });
    }
  }
  {
    Check c(suite, "foset.lattice-identities",
            "idempotence, commutativity, absorption and the meet/join characterization of the order", options.seed);
    for (const auto& m : lattices) {
      for (ElementIndex x = 0; x < m.size(); ++x) {
        for (ElementIndex y = 0; y < m.size(); ++y) {
          const ElementIndex j = *join(m, x, y);
          const ElementIndex w = *meet(m, x, y);
          const bool idempotent = *join(m, x, x) == x && *meet(m, x, x) == x;
          const bool commutative = j == *join(m, y, x) && w == *meet(m, y, x);
          const bool absorbing = *meet(m, x, j) == x && *join(m, x, w) == x;
          const bool order = m.precedes(x, y) == (w == x) && m.precedes(x, y) == (j == y);
          c.expect(idempotent && commutative && absorbing && order, [&] {
            return "x=" + m.label(x) + ", y=" + m.label(y) + " in " + describe_matrix(m);
          });
        }
      }
    }
  }
  {
    Check c(suite, "foset.bound-sets", "supports of U(A) and L(A) equal the definitional bound sets", options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const MembershipMatrix m = generated(c.rng(), 2, 8);
      const auto subset = random_subset(c.rng(), m.size());
      for (bool upward : {true, false}) {
        const FuzzySubset lib = upward ? upper_bound_set(m, subset) : lower_bound_set(m, subset);
        const std::vector<bool> ref = oracle::bounds(m, subset, upward);
        bool same = true;
        for (std::size_t y = 0; y < m.size(); ++y) same = same && lib.contains(y) == ref[y];
        c.expect(same, [&] {
          return std::string(upward ? "U" : "L") + labels_of(m, subset) + " in " + describe_matrix(m);
        });
      }
    }
  }
  {
    Check c(suite, "foset.lattice-by-pairs", "the pairwise lattice test agrees with the all-subsets definition",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const MembershipMatrix m = generated(c.rng(), 1, 6);
      c.expect(is_lattice(m) == oracle::all_subsets_bounded(m), [&] { return describe_matrix(m); });
    }
  }
  {
    Check c(suite, "foset.directed-by-pairs", "the pairwise directedness test agrees with the finite-subset definition",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const MembershipMatrix m = generated(c.rng(), 2, 7);
      const auto subset = random_subset(c.rng(), m.size());
      const bool right = is_directed(m, subset, Direction::Right) == oracle::directed_by_subsets(m, subset, true);
      const bool left = is_directed(m, subset, Direction::Left) == oracle::directed_by_subsets(m, subset, false);
      c.expect(right && left, [&] { return labels_of(m, subset) + " in " + describe_matrix(m); });
    }
  }
  {
    Check c(suite, "foset.closure-transitive", "max-min closure of a random graded relation is transitive and minimal",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const std::size_t n = 2 + random_index(c.rng(), 6);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
      std::vector<Grade> g;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          g.push_back(x == y ? Grade::one() : (coin(c.rng(), 0.3) ? Grade(Rational(static_cast<long>(random_index(c.rng(), 13)), 12L))
                                                                  : Grade::zero()));
        }
      }
      const MembershipMatrix raw = MembershipMatrix::from_grades(labels, g);
      const MembershipMatrix closed = max_min_closure(raw);
      bool ok = validate_fuzzy_order(closed).transitivity_violations.empty();
      // Minimality: every closed grade is attained by some path of raw edges.
      for (std::size_t x = 0; x < n && ok; ++x) {
        for (std::size_t z = 0; z < n && ok; ++z) {
          ok = !(closed.grade(x, z) < raw.grade(x, z));
          if (x == z || closed.grade(x, z) == raw.grade(x, z)) continue;
          bool attained = false;
          for (std::size_t y = 0; y < n && !attained; ++y) {
            if (y != x && y != z) attained = std::min(closed.grade(x, y), closed.grade(y, z)) == closed.grade(x, z);
          }
          ok = ok && attained;
        }
      }
      c.expect(ok, [&] { return describe_matrix(raw); });
    }
  }
  return suite;
}

}  // namespace fuzzy::checks
