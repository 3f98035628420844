#pragma once

// Finite fuzzy ordered sets.
//
// A carrier of labelled elements carries a grade mu(x, y) in [0,1] for every
// ordered pair. "x precedes y" is read as mu(x, y) > 1/2. Every operation here
// is an exhaustive scan over the carrier, so the carrier size is capped
// (default 64); the cubic transitivity scan is the bottleneck.

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzy/rational.hpp"

namespace fuzzy {

using ElementIndex = std::size_t;
using ElementSet = std::vector<ElementIndex>;

inline constexpr std::size_t kDefaultCarrierCap = 64;

struct GradeEntry {
  std::string from;
  std::string to;
  Grade grade;
};

class MembershipMatrix {
 public:
  /// Pairs not listed in `entries` default to 1 on the diagonal and 0 elsewhere.
  /// Throws InvalidCarrier on duplicate or empty labels, UnknownElement on an
  /// entry naming a missing label, CarrierTooLarge past `carrier_cap`.
  explicit MembershipMatrix(std::vector<std::string> elements,
                            std::span<const GradeEntry> entries = {},
                            std::size_t carrier_cap = kDefaultCarrierCap);

  /// Row-major grades, `grades.size() == elements.size()^2`.
  static MembershipMatrix from_grades(std::vector<std::string> elements, std::vector<Grade> grades,
                                      std::size_t carrier_cap = kDefaultCarrierCap);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& label(ElementIndex i) const { return elements_.at(i); }
  ElementIndex index_of(std::string_view label) const;
  ElementSet indices_of(std::span<const std::string> labels) const;

  const Grade& grade(ElementIndex from, ElementIndex to) const {
    return grades_[from * elements_.size() + to];
  }
  bool precedes(ElementIndex from, ElementIndex to) const { return grade(from, to).holds(); }

  /// Copy with a single entry replaced.
  MembershipMatrix with_grade(ElementIndex from, ElementIndex to, Grade g) const;

  friend bool operator==(const MembershipMatrix&, const MembershipMatrix&) = default;

 private:
  MembershipMatrix() = default;
  void check_labels(std::size_t carrier_cap) const;

  std::vector<std::string> elements_;
  std::vector<Grade> grades_;
};

/// A fuzzy subset of a carrier, indexed like the carrier's elements.
class FuzzySubset {
 public:
  explicit FuzzySubset(std::vector<Grade> membership) : membership_(std::move(membership)) {}

  std::size_t size() const noexcept { return membership_.size(); }
  const Grade& operator[](ElementIndex i) const { return membership_.at(i); }
  const std::vector<Grade>& membership() const noexcept { return membership_; }

  /// Elements with membership > 0.
  ElementSet support() const;
  bool contains(ElementIndex i) const { return !membership_.at(i).is_zero(); }

 private:
  std::vector<Grade> membership_;
};

struct AntisymmetryViolation {
  ElementIndex x;
  ElementIndex y;
  Rational grade_sum;
};

struct TransitivityViolation {
  ElementIndex x;
  ElementIndex y;  // intermediate element attaining the max-min bound
  ElementIndex z;
  Grade required;
  Grade actual;
};

struct AxiomReport {
  std::vector<ElementIndex> reflexivity_violations;
  std::vector<AntisymmetryViolation> antisymmetry_violations;
  std::vector<TransitivityViolation> transitivity_violations;

  bool is_fuzzy_order() const noexcept {
    return reflexivity_violations.empty() && antisymmetry_violations.empty() &&
           transitivity_violations.empty();
  }
};

AxiomReport validate_fuzzy_order(const MembershipMatrix& m);

FuzzySubset upper_bound_set(const MembershipMatrix& m, std::span<const ElementIndex> subset);
FuzzySubset lower_bound_set(const MembershipMatrix& m, std::span<const ElementIndex> subset);

/// Unique element satisfying the supremum definition, found by a full scan.
/// Throws BrokenOrder when two distinct candidates pass (the matrix is then
/// not a fuzzy order) and EmptyQuery on an empty subset.
std::optional<ElementIndex> supremum(const MembershipMatrix& m, std::span<const ElementIndex> subset);
std::optional<ElementIndex> infimum(const MembershipMatrix& m, std::span<const ElementIndex> subset);

std::optional<ElementIndex> join(const MembershipMatrix& m, ElementIndex x, ElementIndex y);
std::optional<ElementIndex> meet(const MembershipMatrix& m, ElementIndex x, ElementIndex y);

/// Every two-element subset has a join and a meet. On a finite carrier this is
/// equivalent to every nonempty finite subset having both: sup{a1..ak} is
/// sup{sup{a1..a(k-1)}, ak} whenever the pairwise sups exist, by induction on k
/// using transitivity of the threshold relation.
/// Throws InvalidOrder when `m` is not a fuzzy order.
bool is_lattice(const MembershipMatrix& m);

enum class Direction { Right, Left, Both };

/// For every pair {a, b} drawn from `subset`, some element of `subset` lies in
/// the support of U({a,b}) (right) or L({a,b}) (left). Pairs suffice: a bound
/// of a bound of {a,b} and c bounds {a,b,c} by threshold transitivity. An
/// empty subset is not directed.
bool is_directed(const MembershipMatrix& m, std::span<const ElementIndex> subset, Direction direction);

/// Max-min transitive closure: mu*(x,z) = max over paths of the min edge grade.
/// Diagonal entries are left untouched.
MembershipMatrix max_min_closure(const MembershipMatrix& m);

struct FosetGeneratorOptions {
  std::size_t min_size = 2;
  std::size_t max_size = 8;
  double edge_probability = 0.35;
  /// Grade of every strictly related pair; must lie in (1/2, 1].
  Rational strict_grade{2, 3};
  /// When set, each covering edge gets its own random grade in (1/2, 1] and
  /// the matrix is closed under max-min composition instead.
  bool graded_edges = false;
};

/// Random crisp partial order (random DAG + transitive closure) lifted to a
/// fuzzy order. The result always validates.
MembershipMatrix random_foset(std::mt19937_64& rng, const FosetGeneratorOptions& options = {});

}  // namespace fuzzy
