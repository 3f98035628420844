#pragma once

// Reference computations used only by the theorem suites and tests. Each one
// re-derives its answer from the defining property by brute force or by a
// different route than the library, so agreement between the two is evidence
// rather than tautology.

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "fuzzy/foset.hpp"
#include "fuzzy/ideals.hpp"
#include "fuzzy/riesz.hpp"

namespace fuzzy::checks::oracle {

// Finite fuzzy ordered sets.

/// Elements y with mu(a, y) > 1/2 for every a in the subset (or mu(y, a) when
/// `upward` is false).
std::vector<bool> bounds(const MembershipMatrix& m, std::span<const ElementIndex> subset, bool upward);

/// Every element meeting the supremum definition: a bound lying below every
/// other bound. A fuzzy order never has two.
std::vector<ElementIndex> extremum_candidates(const MembershipMatrix& m, std::span<const ElementIndex> subset,
                                              bool upward);

/// Every nonempty subset has a supremum and an infimum (exhaustive).
bool all_subsets_bounded(const MembershipMatrix& m);

/// Every finite subset E of D has an element of D bounding all of E
/// (exhaustive over subsets; the empty D is not directed).
bool directed_by_subsets(const MembershipMatrix& m, std::span<const ElementIndex> subset, bool upward);

enum class MutationKind { Reflexivity, Antisymmetry, Transitivity };

struct Mutation {
  MembershipMatrix matrix;
  MutationKind kind;
  ElementIndex from;
  ElementIndex to;
};

/// A single-entry change that breaks one axiom of the valid order `m`.
Mutation mutate(std::mt19937_64& rng, const MembershipMatrix& m);

// Coordinate spaces, by direct coordinate arithmetic.

bool below(const SpaceSpec& s, const RationalVector& x, const RationalVector& y);
RationalVector max_of(const SpaceSpec& s, const RationalVector& x, const RationalVector& y);
RationalVector min_of(const SpaceSpec& s, const RationalVector& x, const RationalVector& y);
RationalVector magnitude(const SpaceSpec& s, const RationalVector& x);
bool orthogonal(const SpaceSpec& s, const RationalVector& x, const RationalVector& y);

// Ideals and bands.

/// x belongs to the ideal generated by D: some nonempty subset of D and some
/// lambda >= 0 give |x| below lambda * (sum of the subset's magnitudes). The
/// lambda candidates are 0 and, per coordinate, ratio and ratio + 1.
bool lambda_search(const SpaceSpec& s, std::span<const RationalVector> D, const RationalVector& x);

enum class Stabilization { Member, NonMember, Undecided };

/// x belongs to the band generated by D when |x| ^ n g increases to |x|, with
/// g the sum of the magnitudes in D. Iterates until two consecutive terms
/// agree (then the sequence is constant) or `cap` steps pass.
Stabilization stabilization(const SpaceSpec& s, std::span<const RationalVector> D, const RationalVector& x,
                            std::size_t cap = 4096);

/// Supremum of |y| ^ n|x| over n, when it is reached.
std::optional<RationalVector> stabilized_supremum(const SpaceSpec& s, const RationalVector& x,
                                                  const RationalVector& y, std::size_t cap = 4096);

/// Representative members of a handle read off its closed-form description:
/// unit vectors of the support (or axis) plus `extra` random members.
std::vector<RationalVector> members(std::mt19937_64& rng, const SpaceSpec& s, const Handle& h, std::size_t extra);

/// Random vector inside the handle.
RationalVector random_member(std::mt19937_64& rng, const SpaceSpec& s, const Handle& h);

/// x is orthogonal to every listed vector.
bool orthogonal_to_all(const SpaceSpec& s, std::span<const RationalVector> probes, const RationalVector& x);

/// Nonzero y in h with |y| below |x|, searched among coordinate pieces of x,
/// the axis unit and x itself.
std::optional<RationalVector> dominated_member(const SpaceSpec& s, const Handle& h, const RationalVector& x);

/// x = x1 + x2 with x1 in a, x2 in b, found by exact linear solve against the
/// unit vectors spanning a and b.
std::optional<std::pair<RationalVector, RationalVector>> split_by_solve(const SpaceSpec& s, const Handle& a,
                                                                        const Handle& b, const RationalVector& x);

/// Greatest element of B ^ [0, x] for positive x, or nullopt when that set
/// has no supremum (lex axis with x off the axis).
std::optional<RationalVector> interval_maximum(const SpaceSpec& s, const Handle& b, const RationalVector& x);

}  // namespace fuzzy::checks::oracle
