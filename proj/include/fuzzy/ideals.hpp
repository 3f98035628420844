#pragma once

// Solid sets, fuzzy ideals and fuzzy bands of the preset spaces.
//
// Ideals live on infinite carriers, so they are represented by closed-form
// handles. The classification is:
//
//   Pointwise  ideals are exactly the coordinate-support subspaces
//              {x : x_j = 0 for j outside S}. Each is a band, B = B^dd.
//   Lex        the only ideals are {0}, the axis {(0, t)} and the whole
//              plane (a solid set containing some (a, b) with a != 0 contains
//              every vector). All three are bands, but Axis^dd = Full.
//
// Since every ideal of a preset space is a band, one handle type serves both.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzy/riesz.hpp"

namespace fuzzy {

enum class LexKind { Zero, Axis, Full };

std::string_view to_string(LexKind k) noexcept;

class Handle {
 public:
  /// `support` holds 1-based coordinate indices; duplicates are merged.
  /// Throws InvalidHandle on an index outside 1..dimension.
  static Handle pointwise(std::size_t dimension, std::vector<std::size_t> support);
  static Handle lex(LexKind kind);
  static Handle zero(const SpaceSpec& s);
  static Handle full(const SpaceSpec& s);
  /// Pointwise handle from a 0-based coordinate mask.
  static Handle from_mask(const std::vector<bool>& mask);

  Family family() const noexcept { return family_; }
  std::size_t dimension() const noexcept { return dimension_; }
  /// Sorted 1-based support (pointwise only).
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  LexKind kind() const noexcept { return kind_; }
  /// 0-based coordinate mask (pointwise only).
  std::vector<bool> mask() const;

  bool is_zero() const noexcept;
  bool is_full() const noexcept;

  friend bool operator==(const Handle&, const Handle&) = default;

 private:
  Handle() = default;

  Family family_ = Family::Pointwise;
  std::size_t dimension_ = 0;
  std::vector<std::size_t> support_;
  LexKind kind_ = LexKind::Zero;
};

using IdealHandle = Handle;
using BandHandle = Handle;

/// Throws InvalidHandle when `h` does not belong to space `s`.
void check_handle(const SpaceSpec& s, const Handle& h);

/// "pointwise support {1,3}", "lex axis".
std::string format_handle(const Handle& h);

bool solid_hull_contains(const SpaceSpec& s, std::span<const RationalVector> A, const RationalVector& x);

struct SolidityReport {
  bool solid = true;
  /// (x, y): y in A, mu(|x|, |y|) > 1/2, x not in A.
  std::optional<std::pair<RationalVector, RationalVector>> witness;
};

/// Closure of a finite set under domination, checked on probe points below
/// each member (half, zero, |y|, -y) and then on an integer grid box around it.
SolidityReport is_solid(const SpaceSpec& s, std::span<const RationalVector> A);

struct SubspaceReport {
  bool closed = true;
  /// Decided by recognizing the span rather than by sampling.
  bool closed_form = false;
  struct Witness {
    RationalVector x, y, join;
  };
  std::optional<Witness> witness;
};

/// Whether span(basis) is closed under join and meet. Lex: always (the order
/// is total). Pointwise: coordinate subspaces and the constants line are
/// recognized; otherwise basis probes and `samples` random span elements are
/// tested by exact linear solve. Throws DegenerateBasis on a dependent basis.
SubspaceReport is_riesz_subspace(const SpaceSpec& s, std::span<const RationalVector> basis,
                                 std::size_t samples = 256, std::uint64_t seed = 0);

/// Throws EmptyQuery on an empty D.
IdealHandle ideal_generated(const SpaceSpec& s, std::span<const RationalVector> D);
BandHandle band_generated(const SpaceSpec& s, std::span<const RationalVector> D);

bool ideal_contains(const SpaceSpec& s, const Handle& h, const RationalVector& x);

struct StabilizationTrace {
  bool contained = false;
  /// m_1, m_2, ... up to one step past stabilization (or a short prefix
  /// when the sequence diverges).
  std::vector<RationalVector> sequence;
  std::optional<std::size_t> stabilization_index;
  std::size_t bound = 0;
  RationalVector stable_value;
  std::string note;
};

inline constexpr std::size_t kDefaultStabilizationCap = 1u << 16;

/// Whether y lies in the band generated by x, by iterating
/// m_n = |y| ^ n|x| up to a precomputed bound. In the lex family with x on the
/// axis and y off it the sequence never stabilizes; the result is false.
/// Throws StabilizationOverflow when the bound exceeds `cap`.
StabilizationTrace principal_band_contains(const SpaceSpec& s, const RationalVector& x,
                                           const RationalVector& y,
                                           std::size_t cap = kDefaultStabilizationCap);

BandHandle disjoint_complement(const SpaceSpec& s, const Handle& h);
/// D^d; equals the complement of the band generated by D. The empty set has
/// the whole space as complement.
BandHandle disjoint_complement(const SpaceSpec& s, std::span<const RationalVector> D);

bool is_order_dense(const SpaceSpec& s, const Handle& h);

IdealHandle ideal_sum(const SpaceSpec& s, const Handle& a, const Handle& b);
IdealHandle ideal_intersection(const SpaceSpec& s, const Handle& a, const Handle& b);
/// a is a subset of b.
bool handle_includes(const SpaceSpec& s, const Handle& a, const Handle& b);

/// x = x1 + x2 with x1 in a and x2 in b, built from support masks; nullopt
/// when x is outside a + b. Unique when a and b meet only in 0.
std::optional<std::pair<RationalVector, RationalVector>> split_into_sum(const SpaceSpec& s, const Handle& a,
                                                                       const Handle& b,
                                                                       const RationalVector& x);

/// a meets b only in 0 and a + b is the whole space.
bool is_direct_sum_decomposition(const SpaceSpec& s, const Handle& a, const Handle& b);

/// Every handle of the space: 2^n supports (pointwise) or the three lex kinds.
std::vector<Handle> all_handles(const SpaceSpec& s);

}  // namespace fuzzy
