#pragma once

// Concrete fuzzy Riesz spaces over exact-rational coordinate vectors.
//
// Two membership families are supported, both with grade 1 on equality, a
// constant grade c in (1/2, 1] on strict precedence and 0 otherwise:
//
//   Pointwise  x precedes y iff x_i <= y_i for every coordinate. Archimedean.
//   Lex        (dimension 2) x precedes y iff x <_lex y. A total order, so
//              join/meet are max/min; not Archimedean since n(0,1) < (1,0).
//
// Transitivity: for x != z reached through y, at least one step is strict so
// min(mu(x,y), mu(y,z)) <= c = mu(x,z); equal endpoints give grade 1. Both
// relations are translation and positive-scaling invariant, so the grades are
// too. Arbitrary user grade functions are not accepted since max-min
// transitivity on an infinite carrier cannot be checked mechanically.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzy/rational.hpp"

namespace fuzzy {

class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dimension) : coords_(dimension, Rational(0)) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RationalVector unit(std::size_t dimension, std::size_t index);

  std::size_t dimension() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coordinates() const noexcept { return coords_; }

  bool is_zero() const;

  RationalVector& operator+=(const RationalVector& other);
  RationalVector& operator-=(const RationalVector& other);
  RationalVector& operator*=(const Rational& scalar);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector v) { return v *= s; }
  friend RationalVector operator-(RationalVector v) { return v *= Rational(-1); }
  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<Rational> coords_;
};

/// "(1, -2/3, 0)".
std::string format_vector(const RationalVector& v);
/// Accepts "1,-2/3,0", "(1, -2/3, 0)" or "[1, -2/3, 0]".
RationalVector parse_vector(std::string_view text);

enum class Family { Pointwise, Lex };

std::string_view to_string(Family f) noexcept;

class SpaceSpec {
 public:
  /// Throws InvalidSpace when grade_c is outside (1/2, 1], the dimension is
  /// zero, or a lex space is not two-dimensional.
  SpaceSpec(Family family, std::size_t dimension, Rational grade_c);

  static SpaceSpec pointwise(std::size_t dimension, Rational grade_c = Rational(2, 3)) {
    return SpaceSpec(Family::Pointwise, dimension, std::move(grade_c));
  }
  static SpaceSpec lex(Rational grade_c = Rational(2, 3)) {
    return SpaceSpec(Family::Lex, 2, std::move(grade_c));
  }

  Family family() const noexcept { return family_; }
  std::size_t dimension() const noexcept { return dimension_; }
  const Rational& grade_c() const noexcept { return grade_c_; }

  RationalVector zero() const { return RationalVector(dimension_); }

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

 private:
  Family family_;
  std::size_t dimension_;
  Rational grade_c_;
};

/// Throws DimensionError unless every vector matches the space.
void check_dimension(const SpaceSpec& s, const RationalVector& v);

Grade mu(const SpaceSpec& s, const RationalVector& x, const RationalVector& y);

/// mu(x, y) > 1/2.
inline bool precedes(const SpaceSpec& s, const RationalVector& x, const RationalVector& y) {
  return mu(s, x, y).holds();
}
/// mu(0, x) > 1/2.
bool is_positive(const SpaceSpec& s, const RationalVector& x);

RationalVector join(const SpaceSpec& s, const RationalVector& x, const RationalVector& y);
RationalVector meet(const SpaceSpec& s, const RationalVector& x, const RationalVector& y);

RationalVector pos_part(const SpaceSpec& s, const RationalVector& x);  // x v 0
RationalVector neg_part(const SpaceSpec& s, const RationalVector& x);  // (-x) v 0
RationalVector abs(const SpaceSpec& s, const RationalVector& x);       // x v (-x)

struct DecompositionResult {
  std::vector<RationalVector> parts;
};

/// Splits x into parts x_i with sum x and |x_i| <= |y_i| by iterated clamping
/// x_i = ((r v -|y_i|) ^ |y_i|) of the running remainder r; the last part is
/// the remainder. Positive x yields positive parts.
/// Throws NotDominated unless mu(|x|, |y_1 + ... + y_n|) > 1/2.
DecompositionResult riesz_decompose(const SpaceSpec& s, const RationalVector& x,
                                    std::span<const RationalVector> ys);

bool is_disjoint(const SpaceSpec& s, const RationalVector& x, const RationalVector& y);

struct BoundednessReport {
  std::size_t horizon = 0;
  /// mu(n x, y) > 1/2 for every n <= horizon.
  bool all_checks_pass = true;
  std::optional<std::size_t> first_failure;
  /// Whether {n x} is bounded above at all in the family's real model.
  bool closed_form_bounded = false;
};

BoundednessReport is_nx_bounded(const SpaceSpec& s, const RationalVector& x, const RationalVector& y,
                                std::size_t horizon);

/// Infimum of {x/n : n >= 1} for positive x: 0 when it exists, nullopt in the
/// lex family off the axis (lower bounds (0,t) have no greatest element).
/// Throws NotPositive unless mu(0, x) > 1/2.
std::optional<RationalVector> infimum_of_scaled(const SpaceSpec& s, const RationalVector& x);

struct SpaceProperties {
  bool archimedean = true;
  std::string dedekind_note;
  /// (x, bound) with mu(n x, bound) > 1/2 for every n, when not Archimedean.
  std::optional<std::pair<RationalVector, RationalVector>> witness;
};

SpaceProperties space_properties(const SpaceSpec& s);

struct VectorGeneratorOptions {
  int max_numerator = 10;                // coordinates p/q with |p| <= K
  std::vector<int> denominators{1, 2, 3};
  double zero_probability = 0.2;         // per coordinate, to hit supports/axes
};

RationalVector random_vector(std::mt19937_64& rng, std::size_t dimension,
                             const VectorGeneratorOptions& options = {});

/// Random vector with mu(0, v) > 1/2 in `s`.
RationalVector random_positive(std::mt19937_64& rng, const SpaceSpec& s,
                               const VectorGeneratorOptions& options = {});

}  // namespace fuzzy
