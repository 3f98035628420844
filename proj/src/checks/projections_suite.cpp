#include <algorithm>

#include "fuzzy/checks/oracles.hpp"
#include "fuzzy/checks/suite.hpp"
#include "fuzzy/error.hpp"
#include "fuzzy/matrix.hpp"
#include "fuzzy/projections.hpp"

namespace fuzzy::checks {

namespace {

std::string v(const RationalVector& x) { return format_vector(x); }

std::vector<SpaceSpec> spaces(std::size_t max_dimension) {
  std::vector<SpaceSpec> out;
  for (std::size_t d = 1; d <= max_dimension; ++d) out.push_back(SpaceSpec::pointwise(d));
  out.push_back(SpaceSpec::lex());
  return out;
}

std::vector<Handle> projection_bands(const SpaceSpec& s) {
  std::vector<Handle> out;
  for (const Handle& h : all_handles(s)) {
    if (s.family() == Family::Pointwise || h.kind() != LexKind::Axis) out.push_back(h);
  }
  return out;
}

OperatorMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double zero_p = 0.3) {
  OperatorMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!coin(rng, zero_p)) m(r, c) = random_rational(rng, 4, 2);
    }
  }
  return m;
}

OperatorMatrix random_nonnegative(std::mt19937_64& rng, std::size_t n) {
  OperatorMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = ::abs(random_rational(rng, 4, 2));
  }
  return m;
}

// q = 0, p > 0, d >= 0 keeps the lex cone invariant.
OperatorMatrix random_lex_positive(std::mt19937_64& rng) {
  Rational p = ::abs(random_rational(rng, 4, 2));
  if (sgn(p) == 0) p = 1;
  return OperatorMatrix{{p, 0}, {random_rational(rng, 4, 2), ::abs(random_rational(rng, 4, 2))}};
}

RationalVector positive_vector(std::mt19937_64& rng, const SpaceSpec& s) {
  return oracle::magnitude(s, random_vector(rng, s.dimension()));
}

bool diagonal_zero_one(const OperatorMatrix& T) {
  for (std::size_t r = 0; r < T.rows(); ++r) {
    for (std::size_t c = 0; c < T.cols(); ++c) {
      const Rational& e = T(r, c);
      if (r != c && sgn(e) != 0) return false;
      if (r == c && sgn(e) != 0 && e != 1) return false;
    }
  }
  return true;
}

}  // namespace

SuiteResult run_projections_suite(const SuiteOptions& options) {
  SuiteResult suite{"projections", {}};

  {
    Check c(suite, "projection.complement-identity", "P for B^d equals I - P for B, for every projection band",
            options.seed);
    for (const SpaceSpec& s : spaces(6)) {
      const OperatorMatrix id = OperatorMatrix::identity(s.dimension());
      for (const Handle& b : projection_bands(s)) {
        c.expect(band_projection_operator(s, disjoint_complement(s, b)) == id - band_projection_operator(s, b),
                 [&] { return format_handle(b); });
      }
    }
  }
  {
    Check c(suite, "projection.intersection-product",
            "P for B1 ^ B2 equals P1 P2 and P2 P1, for every pair of projection bands", options.seed);
    for (const SpaceSpec& s : spaces(6)) {
      const auto bands = projection_bands(s);
      for (const Handle& a : bands) {
        const OperatorMatrix pa = band_projection_operator(s, a);
        for (const Handle& b : bands) {
          const OperatorMatrix pb = band_projection_operator(s, b);
          const OperatorMatrix meet = band_projection_operator(s, ideal_intersection(s, a, b));
          c.expect(meet == pa * pb && meet == pb * pa, [&] { return format_handle(a) + " and " + format_handle(b); });
        }
      }
    }
  }
  {
    Check c(suite, "projection.sum-formula", "P for B1 + B2 equals P1 + P2 - P1 P2, for every pair of projection bands",
            options.seed);
    for (const SpaceSpec& s : spaces(6)) {
      const auto bands = projection_bands(s);
      for (const Handle& a : bands) {
        const OperatorMatrix pa = band_projection_operator(s, a);
        for (const Handle& b : bands) {
          const OperatorMatrix pb = band_projection_operator(s, b);
          const OperatorMatrix sum = band_projection_operator(s, ideal_sum(s, a, b));
          c.expect(sum == pa + pb - pa * pb, [&] { return format_handle(a) + " and " + format_handle(b); });
        }
      }
    }
  }
  {
    Check c(suite, "projection.order-equivalence",
            "B1 within B2, P1 P2 = P2 P1 = P1 and P1 before P2 coincide, and match inclusion of spanning units",
            options.seed);
    for (const SpaceSpec& s : spaces(6)) {
      const auto bands = projection_bands(s);
      for (const Handle& a : bands) {
        const auto units = oracle::members(c.rng(), s, a, 0);
        for (const Handle& b : bands) {
          const ProjectionComparison cmp = compare_projections(s, a, b);
          const bool inside = std::all_of(units.begin(), units.end(),
                                          [&](const RationalVector& u) { return ideal_contains(s, b, u); });
          c.expect(cmp.agree() && cmp.included == inside,
                   [&] { return format_handle(a) + " vs " + format_handle(b); });
        }
      }
    }
  }
  {
    Check c(suite, "projection.principal-identities",
            "complement, intersection and sum identities for principal bands; for positive x, y the bands of "
            "x ^ y and x + y are the intersection and sum",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const SpaceSpec s = SpaceSpec::pointwise(1 + k % 4);
      const RationalVector x = random_vector(c.rng(), s.dimension());
      const RationalVector y = random_vector(c.rng(), s.dimension());
      c.run([&](std::string& d) {
        d = "x=" + v(x) + " y=" + v(y);
        const RationalVector xs[] = {x};
        const RationalVector ys[] = {y};
        const Handle bx = band_generated(s, xs);
        const Handle by = band_generated(s, ys);
        const OperatorMatrix px = band_projection_operator(s, bx);
        const OperatorMatrix py = band_projection_operator(s, by);
        const OperatorMatrix id = OperatorMatrix::identity(s.dimension());
        bool ok = band_projection_operator(s, disjoint_complement(s, bx)) == id - px &&
                  band_projection_operator(s, ideal_intersection(s, bx, by)) == px * py &&
                  band_projection_operator(s, ideal_sum(s, bx, by)) == px + py - px * py;
        const RationalVector p = oracle::magnitude(s, x);
        const RationalVector q = oracle::magnitude(s, y);
        const RationalVector meet_pq[] = {oracle::min_of(s, p, q)};
        const RationalVector sum_pq[] = {p + q};
        ok = ok && band_generated(s, meet_pq) == ideal_intersection(s, bx, by) &&
             band_generated(s, sum_pq) == ideal_sum(s, bx, by);
        return ok;
      });
    }
  }
  {
    Check c(suite, "projection.positive", "band projections map the positive cone into itself", options.seed);
    for (const SpaceSpec& s : spaces(6)) {
      for (const Handle& b : projection_bands(s)) {
        const OperatorMatrix P = band_projection_operator(s, b);
        bool ok = is_fuzzy_positive(s, s, P).positive;
        for (std::size_t k = 0; k < 8 && ok; ++k) {
          ok = oracle::below(s, s.zero(), P.apply(positive_vector(c.rng(), s)));
        }
        c.expect(ok, [&] { return format_handle(b); });
      }
    }
  }
  {
    Check c(suite, "projection.interval-supremum",
            "P_B(x) is the greatest element of B ^ [0, x] for positive x, equal to the closed-form maximum",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const SpaceSpec s = k % 5 == 4 ? SpaceSpec::lex() : SpaceSpec::pointwise(1 + k % 4);
      const auto bands = projection_bands(s);
      const Handle b = bands[random_index(c.rng(), bands.size())];
      const RationalVector x = positive_vector(c.rng(), s);
      c.run([&](std::string& d) {
        d = format_handle(b) + " x=" + v(x);
        const RationalVector top = projection_by_interval_sup(s, b, x);
        const auto ref = oracle::interval_maximum(s, b, x);
        bool ok = ref && top == *ref && ideal_contains(s, b, top) && oracle::below(s, s.zero(), top) &&
                  oracle::below(s, top, x);
        for (std::size_t j = 0; j < 8 && ok; ++j) {
          const RationalVector z = oracle::magnitude(s, oracle::random_member(c.rng(), s, b));
          if (oracle::below(s, z, x)) ok = oracle::below(s, z, top);
        }
        return ok;
      });
    }
  }
  {
    Check c(suite, "projection.band-characterization",
            "B is a projection band exactly when every B ^ [0, x] has a supremum in B and when some ideal "
            "complements B",
            options.seed);
    for (const SpaceSpec& s : spaces(6)) {
      const std::vector<Handle> hs = all_handles(s);
      for (const Handle& b : hs) {
        std::vector<RationalVector> probes = oracle::members(c.rng(), s, Handle::full(s), 4);
        bool suprema = true;
        for (auto& p : probes) suprema = suprema && oracle::interval_maximum(s, b, oracle::magnitude(s, p));
        const bool complemented = std::any_of(hs.begin(), hs.end(), [&](const Handle& i) {
          return is_direct_sum_decomposition(s, i, b);
        });
        const bool projection = is_projection_band(s, b);
        c.expect(projection == suprema && projection == complemented, [&] { return format_handle(b); });
      }
    }
  }
  {
    Check c(suite, "projection.principal-supremum",
            "P_x(y) = sup_n (y ^ n|x|) for positive y matches the projection matrix and direct iteration; general y "
            "goes through y+ and y-",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const SpaceSpec s = k % 5 == 4 ? SpaceSpec::lex() : SpaceSpec::pointwise(1 + k % 4);
      const RationalVector x = random_vector(c.rng(), s.dimension());
      const RationalVector y = random_vector(c.rng(), s.dimension());
      const RationalVector py = oracle::magnitude(s, y);
      c.run([&](std::string& d) {
        d = std::string(to_string(s.family())) + " x=" + v(x) + " y=" + v(y);
        const RationalVector xs[] = {x};
        const Handle bx = band_generated(s, xs);
        const bool axis = s.family() == Family::Lex && bx.kind() == LexKind::Axis;
        if (axis) {
          try {
            principal_projection(s, x, py);
            return false;
          } catch (const Error& e) {
            return e.code() == ErrorCode::NotProjectionBand;
          }
        }
        const OperatorMatrix P = band_projection_operator(s, bx);
        const PrincipalProjection pos = principal_projection(s, x, py);
        const auto ref = oracle::stabilized_supremum(s, x, py);
        const PrincipalProjection general = principal_projection(s, x, y);
        return ref && pos.value == *ref && pos.value == P.apply(py) && pos.positive_index <= pos.bound &&
               general.value == P.apply(y);
      });
    }
  }
  {
    Check c(suite, "projection.band-classification",
            "idempotent, positive and below I; disjoint ranges; and being a band projection matrix agree on masks, "
            "oblique idempotents, scaled masks and random matrices",
            options.seed);
    const auto classify = [&](const SpaceSpec& s, const OperatorMatrix& T, std::uint64_t salt) {
      const BandProjectionVerdict verdict = classify_band_projection(s, T, 32, options.seed + salt);
      bool expected = diagonal_zero_one(T);
      if (s.family() == Family::Lex) expected = T == OperatorMatrix::zero(2) || T == OperatorMatrix::identity(2);
      c.expect(verdict.agree() && verdict.is_mask == expected, [&] {
        return std::string(to_string(s.family())) + " T=" + format_matrix(T);
      });
    };
    for (std::size_t d = 1; d <= 4; ++d) {
      const SpaceSpec s = SpaceSpec::pointwise(d);
      for (const Handle& h : all_handles(s)) {
        classify(s, OperatorMatrix::diagonal_mask(h.mask()), d);
        classify(s, Rational(2) * OperatorMatrix::diagonal_mask(h.mask()), d);
      }
    }
    const SpaceSpec lex = SpaceSpec::lex();
    classify(lex, OperatorMatrix::zero(2), 0);
    classify(lex, OperatorMatrix::identity(2), 0);
    for (std::size_t k = 0; k < options.cases / 4 + 1; ++k) {
      const std::size_t d = 2 + k % 3;
      const SpaceSpec s = SpaceSpec::pointwise(d);
      // Oblique rank-one idempotent u w^T with w.u = 1.
      RationalVector u = random_vector(c.rng(), d);
      if (u.is_zero()) u[0] = 1;
      std::size_t pivot = 0;
      while (sgn(u[pivot]) == 0) ++pivot;
      RationalVector w = random_vector(c.rng(), d);
      Rational dot(0);
      for (std::size_t i = 0; i < d; ++i) dot += u[i] * w[i];
      w[pivot] += (1 - dot) / u[pivot];
      OperatorMatrix oblique(d, d);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t col = 0; col < d; ++col) oblique(r, col) = u[r] * w[col];
      }
      classify(s, oblique, k);
      classify(s, random_matrix(c.rng(), d, d), k);
      classify(lex, random_matrix(c.rng(), 2, 2), k);
    }
  }
  {
    Check c(suite, "projection.absolute-bound", "|Tx| <= T|x| for positive T; non-positive T is refused",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const bool lex = k % 5 == 4;
      const SpaceSpec s = lex ? SpaceSpec::lex() : SpaceSpec::pointwise(1 + k % 4);
      const OperatorMatrix T = lex ? random_lex_positive(c.rng()) : random_nonnegative(c.rng(), s.dimension());
      const RationalVector x = random_vector(c.rng(), s.dimension());
      c.run([&](std::string& d) {
        d = "T=" + format_matrix(T) + " x=" + v(x);
        bool ok = absolute_bound_check(s, T, x) &&
                  oracle::below(s, oracle::magnitude(s, T.apply(x)), T.apply(oracle::magnitude(s, x)));
        const OperatorMatrix negative = Rational(-1) * OperatorMatrix::identity(s.dimension());
        try {
          absolute_bound_check(s, negative, x);
          ok = false;
        } catch (const Error& e) {
          ok = ok && e.code() == ErrorCode::NotPositiveOperator;
        }
        return ok;
      });
    }
  }
  {
    Check c(suite, "projection.positivity-decision",
            "the exact cone test agrees with sampled positive inputs, and refusals carry a positive witness mapped "
            "outside the cone",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const SpaceSpec in = k % 3 == 2 ? SpaceSpec::lex() : SpaceSpec::pointwise(1 + k % 3);
      const SpaceSpec out = k % 4 == 3 ? SpaceSpec::lex() : SpaceSpec::pointwise(1 + (k / 3) % 3);
      OperatorMatrix T = random_matrix(c.rng(), out.dimension(), in.dimension(), 0.5);
      if (coin(c.rng())) {
        for (auto r = 0u; r < T.rows(); ++r)
          for (auto col = 0u; col < T.cols(); ++col) T(r, col) = ::abs(T(r, col));
      }
      c.run([&](std::string& d) {
        d = std::string(to_string(in.family())) + " to " + std::string(to_string(out.family())) +
            " T=" + format_matrix(T);
        const PositivityReport r = is_fuzzy_positive(in, out, T);
        if (!r.positive) {
          return r.witness && oracle::below(in, in.zero(), *r.witness) &&
                 !oracle::below(out, out.zero(), T.apply(*r.witness));
        }
        for (std::size_t j = 0; j < 16; ++j) {
          const RationalVector x = positive_vector(c.rng(), in);
          if (!oracle::below(out, out.zero(), T.apply(x))) {
            d += " maps " + v(x) + " outside the cone";
            return false;
          }
        }
        return true;
      });
    }
  }
  {
    Check c(suite, "projection.grade-monotone-gap",
            "the identity from grade 4/5 to grade 2/3 is positive but lowers mu(1, 2) = 4/5 to 2/3", options.seed);
    const SpaceSpec in = SpaceSpec::pointwise(1, Rational(4, 5));
    const SpaceSpec out = SpaceSpec::pointwise(1, Rational(2, 3));
    const OperatorMatrix id = OperatorMatrix::identity(1);
    const GradeMonotoneReport r = is_grade_monotone_positive(in, out, id, 16, options.seed);
    const RationalVector one{Rational(1)};
    const RationalVector two{Rational(2)};
    c.expect(is_fuzzy_positive(in, out, id).positive && !r.monotone && r.witness &&
                 mu(in, one, two).value() == Rational(4, 5) && mu(out, one, two).value() == Rational(2, 3) &&
                 r.witness->input_grade.value() == Rational(4, 5) &&
                 r.witness->output_grade.value() == Rational(2, 3),
             [] { return std::string("identity from grade 4/5 to 2/3"); });
    c.expect(is_grade_monotone_positive(out, in, id, 16, options.seed).monotone,
             [] { return std::string("identity from grade 2/3 to 4/5"); });
  }
  return suite;
}

}  // namespace fuzzy::checks
