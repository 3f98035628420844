#include "fuzzy/projections.hpp"

#include <random>
#include <stdexcept>

#include "fuzzy/error.hpp"

namespace fuzzy {

OrderInterval::OrderInterval(const SpaceSpec& s, RationalVector lo, RationalVector hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!precedes(s, lo_, hi_)) {
    fail(ErrorCode::SpecError, "empty order interval [" + format_vector(lo_) + ", " + format_vector(hi_) + "]");
  }
}

bool OrderInterval::contains(const SpaceSpec& s, const RationalVector& z) const {
  return precedes(s, lo_, z) && precedes(s, z, hi_);
}

bool is_projection_band(const SpaceSpec& s, const Handle& b) {
  return is_direct_sum_decomposition(s, b, disjoint_complement(s, b));
}

namespace {

[[noreturn]] void not_projection_band(const Handle& b) {
  fail(ErrorCode::NotProjectionBand,
       format_handle(b) + " is not a projection band: " +
           (b.family() == Family::Lex ? "axis + axis^d = axis, not the whole plane"
                                      : "band and complement do not span the space"));
}

}  // namespace

OperatorMatrix band_projection_operator(const SpaceSpec& s, const Handle& b) {
  if (!is_projection_band(s, b)) not_projection_band(b);
  if (s.family() == Family::Lex) {
    return b.is_full() ? OperatorMatrix::identity(2) : OperatorMatrix::zero(2);
  }
  return OperatorMatrix::diagonal_mask(b.mask());
}

RationalVector projection_by_interval_sup(const SpaceSpec& s, const Handle& b, const RationalVector& x) {
  check_dimension(s, x);
  if (!is_positive(s, x)) fail(ErrorCode::NotPositive, format_vector(x) + " is not positive");
  const OperatorMatrix P = band_projection_operator(s, b);
  // B ^ [0, x]: pointwise its top element is x restricted to the support;
  // lex B is {0} or everything, with top 0 or x.
  RationalVector top = s.zero();
  if (s.family() == Family::Lex) {
    if (b.is_full()) top = x;
  } else {
    const auto mask = b.mask();
    for (std::size_t i = 0; i < x.dimension(); ++i) {
      if (mask[i]) top[i] = x[i];
    }
  }
  if (!(top == P.apply(x))) {
    throw std::logic_error("interval supremum " + format_vector(top) + " differs from P_B x = " +
                           format_vector(P.apply(x)));
  }
  return top;
}

PrincipalProjection principal_projection(const SpaceSpec& s, const RationalVector& x, const RationalVector& y) {
  check_dimension(s, x);
  check_dimension(s, y);
  const RationalVector generators[] = {x};
  const Handle band = band_generated(s, generators);
  if (!is_projection_band(s, band)) not_projection_band(band);

  PrincipalProjection out;
  const StabilizationTrace up = principal_band_contains(s, x, pos_part(s, y));
  const StabilizationTrace down = principal_band_contains(s, x, neg_part(s, y));
  out.positive_index = up.stabilization_index.value_or(0);
  out.negative_index = down.stabilization_index.value_or(0);
  out.bound = std::max(up.bound, down.bound);
  out.value = up.stable_value - down.stable_value;
  return out;
}

PositivityReport is_fuzzy_positive(const SpaceSpec& in, const SpaceSpec& out, const OperatorMatrix& T) {
  if (T.cols() != in.dimension() || T.rows() != out.dimension()) {
    fail(ErrorCode::DimensionError, "operator is " + std::to_string(T.rows()) + "x" + std::to_string(T.cols()) +
                                        ", spaces need " + std::to_string(out.dimension()) + "x" +
                                        std::to_string(in.dimension()));
  }
  PositivityReport report;
  const auto reject = [&](RationalVector x) {
    report.positive = false;
    report.witness = std::move(x);
    return report;
  };

  if (in.family() == Family::Pointwise) {
    // The cone is generated by the unit vectors and the output cone is convex.
    for (std::size_t i = 0; i < in.dimension(); ++i) {
      if (!is_positive(out, T.column(i))) return reject(RationalVector::unit(in.dimension(), i));
    }
    return report;
  }

  // Lex input: positive vectors are (0, t), t >= 0, and positive multiples of (1, t).
  const RationalVector col1 = T.column(0);
  const RationalVector col2 = T.column(1);
  if (out.family() == Family::Pointwise) {
    for (std::size_t j = 0; j < col2.dimension(); ++j) {
      if (sgn(col2[j]) != 0) {
        // col1_j + t col2_j = -1
        return reject(RationalVector{1, Rational(-(col1[j] + 1) / col2[j])});
      }
    }
    if (!is_positive(out, col1)) return reject(RationalVector{1, 0});
    return report;
  }

  const Rational& p = T(0, 0);
  const Rational& q = T(0, 1);
  const Rational& r = T(1, 0);
  const Rational& d = T(1, 1);
  if (sgn(q) != 0) return reject(RationalVector{1, Rational(-(p + 1) / q)});
  if (sgn(d) < 0) return reject(RationalVector{0, 1});
  if (sgn(p) < 0) return reject(RationalVector{1, 0});
  if (sgn(p) == 0) {
    if (sgn(d) > 0) return reject(RationalVector{1, Rational(-(r + 1) / d)});
    if (sgn(r) < 0) return reject(RationalVector{1, 0});
  }
  return report;
}

GradeMonotoneReport is_grade_monotone_positive(const SpaceSpec& in, const SpaceSpec& out, const OperatorMatrix& T,
                                               std::size_t samples, std::uint64_t seed) {
  if (T.cols() != in.dimension() || T.rows() != out.dimension()) {
    fail(ErrorCode::DimensionError, "operator does not map the input space to the output space");
  }
  GradeMonotoneReport report;
  const auto test = [&](const RationalVector& x, const RationalVector& y) {
    const Grade before = mu(in, x, y);
    const Grade after = mu(out, T.apply(x), T.apply(y));
    if (after < before) {
      report.monotone = false;
      report.witness = GradeMonotoneReport::Witness{x, y, before, after};
      return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < in.dimension(); ++i) {
    const RationalVector e = RationalVector::unit(in.dimension(), i);
    if (!test(e, Rational(2) * e)) return report;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const RationalVector x = random_vector(rng, in.dimension());
    const RationalVector y = (k % 2 == 0) ? x + random_positive(rng, in) : random_vector(rng, in.dimension());
    if (!test(x, y)) return report;
  }
  return report;
}

bool operator_precedes(const SpaceSpec& s, const OperatorMatrix& S, const OperatorMatrix& T) {
  return is_fuzzy_positive(s, s, T - S).positive;
}

bool absolute_bound_check(const SpaceSpec& s, const OperatorMatrix& T, const RationalVector& x) {
  const PositivityReport positivity = is_fuzzy_positive(s, s, T);
  if (!positivity.positive) {
    fail(ErrorCode::NotPositiveOperator, "operator " + format_matrix(T) + " is not fuzzy positive (maps " +
                                             format_vector(*positivity.witness) + " outside the cone)");
  }
  return precedes(s, abs(s, T.apply(x)), T.apply(abs(s, x)));
}

BandProjectionVerdict classify_band_projection(const SpaceSpec& s, const OperatorMatrix& T, std::size_t samples,
                                               std::uint64_t seed) {
  if (T.rows() != s.dimension() || T.cols() != s.dimension()) {
    fail(ErrorCode::DimensionError, "operator must be " + std::to_string(s.dimension()) + "x" +
                                        std::to_string(s.dimension()));
  }
  BandProjectionVerdict v;
  const std::size_t n = s.dimension();
  const OperatorMatrix I = OperatorMatrix::identity(n);

  for (const auto& h : all_handles(s)) {
    if (is_projection_band(s, h) && band_projection_operator(s, h) == T) {
      v.is_mask = true;
      v.band = h;
      break;
    }
  }

  v.idempotent = T.is_idempotent();
  v.positive = is_fuzzy_positive(s, s, T).positive;
  v.below_identity = operator_precedes(s, T, I);

  const OperatorMatrix C = I - T;
  v.disjoint_ranges = true;
  const auto test = [&](const RationalVector& x, const RationalVector& y) {
    if (!is_disjoint(s, T.apply(x), C.apply(y))) {
      v.disjoint_ranges = false;
      v.range_witness = std::make_pair(x, y);
      return false;
    }
    return true;
  };
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i) {
    for (std::size_t j = 0; j < n && ok; ++j) {
      ok = test(RationalVector::unit(n, i), RationalVector::unit(n, j));
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples && ok; ++k) {
    const RationalVector x = random_vector(rng, n);
    const RationalVector y = random_vector(rng, n);
    ok = test(x, y);
  }
  return v;
}

ProjectionComparison compare_projections(const SpaceSpec& s, const Handle& b1, const Handle& b2) {
  const OperatorMatrix P1 = band_projection_operator(s, b1);
  const OperatorMatrix P2 = band_projection_operator(s, b2);
  ProjectionComparison c;
  c.included = handle_includes(s, b1, b2);
  c.absorbing = P1 * P2 == P1 && P2 * P1 == P1;
  c.ordered = operator_precedes(s, P1, P2);
  return c;
}

}  // namespace fuzzy
