#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "fuzzy/ideals.hpp"
#include "fuzzy/matrix.hpp"
#include "fuzzy/riesz.hpp"

namespace fuzzy {

class OrderInterval {
 public:
  /// Throws SpecError unless mu(lo, hi) > 1/2.
  OrderInterval(const SpaceSpec& s, RationalVector lo, RationalVector hi);

  const RationalVector& lo() const noexcept { return lo_; }
  const RationalVector& hi() const noexcept { return hi_; }
  bool contains(const SpaceSpec& s, const RationalVector& z) const;

 private:
  RationalVector lo_;
  RationalVector hi_;
};

/// X = B (+) B^d.
bool is_projection_band(const SpaceSpec& s, const Handle& b);

/// P_B as a matrix. Throws NotProjectionBand (lex axis).
OperatorMatrix band_projection_operator(const SpaceSpec& s, const Handle& b);

/// sup(B ^ [0, x]) by the closed form of the family, cross-checked against
/// the projection matrix. Throws NotPositive, NotProjectionBand.
RationalVector projection_by_interval_sup(const SpaceSpec& s, const Handle& b, const RationalVector& x);

struct PrincipalProjection {
  RationalVector value;
  /// Stabilization of y+ ^ n|x| (and of y- ^ n|x| for the negative part).
  std::size_t positive_index = 0;
  std::size_t negative_index = 0;
  std::size_t bound = 0;
};

/// P_x(y) = sup_n (y ^ n|x|) for positive y, extended to general y as
/// P_x(y+) - P_x(y-). Throws NotProjectionBand when the band generated by x
/// is the lex axis.
PrincipalProjection principal_projection(const SpaceSpec& s, const RationalVector& x, const RationalVector& y);

struct PositivityReport {
  bool positive = true;
  /// Input x with mu(0, x) > 1/2 but nu(0, Tx) <= 1/2.
  std::optional<RationalVector> witness;
};

/// Exact decision of whether T maps the positive cone of `in` into that of
/// `out`. Throws DimensionError when T does not map `in` to `out`.
PositivityReport is_fuzzy_positive(const SpaceSpec& in, const SpaceSpec& out, const OperatorMatrix& T);

struct GradeMonotoneReport {
  bool monotone = true;
  struct Witness {
    RationalVector x, y;
    Grade input_grade;   // mu(x, y)
    Grade output_grade;  // nu(Tx, Ty)
  };
  std::optional<Witness> witness;
};

/// Sampled check of nu(Tx, Ty) >= mu(x, y). Probes the pairs (e_i, 2 e_i)
/// first, then `samples` random pairs drawn from `seed`.
GradeMonotoneReport is_grade_monotone_positive(const SpaceSpec& in, const SpaceSpec& out, const OperatorMatrix& T,
                                               std::size_t samples = 256, std::uint64_t seed = 0);

/// S before T: T - S is fuzzy positive.
bool operator_precedes(const SpaceSpec& s, const OperatorMatrix& S, const OperatorMatrix& T);

/// mu(|Tx|, T|x|) > 1/2. Throws NotPositiveOperator unless T is fuzzy positive.
bool absolute_bound_check(const SpaceSpec& s, const OperatorMatrix& T, const RationalVector& x);

struct BandProjectionVerdict {
  /// T is the matrix of P_B for some projection band B.
  bool is_mask = false;
  std::optional<Handle> band;
  bool idempotent = false;
  bool positive = false;
  bool below_identity = false;
  /// Tx and (I - T)y are disjoint for all x, y.
  bool disjoint_ranges = false;
  /// (x, y) with Tx not disjoint from (I - T)y.
  std::optional<std::pair<RationalVector, RationalVector>> range_witness;

  bool algebraic() const noexcept { return idempotent && positive && below_identity; }
  bool agree() const noexcept { return is_mask == algebraic() && is_mask == disjoint_ranges; }
};

/// Evaluates the three equivalent descriptions of a band projection. Range
/// disjointness is decided on basis pairs (exact for both families) and then
/// corroborated on `samples` random pairs.
BandProjectionVerdict classify_band_projection(const SpaceSpec& s, const OperatorMatrix& T,
                                               std::size_t samples = 64, std::uint64_t seed = 0);

struct ProjectionComparison {
  bool included = false;    // b1 inside b2
  bool absorbing = false;   // P1 P2 = P2 P1 = P1
  bool ordered = false;     // P1 before P2
  bool agree() const noexcept { return included == absorbing && included == ordered; }
};

/// Throws NotProjectionBand when either band is not a projection band.
ProjectionComparison compare_projections(const SpaceSpec& s, const Handle& b1, const Handle& b2);

}  // namespace fuzzy
