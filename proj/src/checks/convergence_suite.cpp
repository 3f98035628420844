#include "fuzzy/checks/oracles.hpp"
#include "fuzzy/checks/suite.hpp"
#include "fuzzy/convergence.hpp"
#include "fuzzy/error.hpp"

namespace fuzzy::checks {

namespace {

std::string v(const RationalVector& x) { return format_vector(x); }

SpaceSpec space_for(std::size_t k) { return k % 5 == 4 ? SpaceSpec::lex() : SpaceSpec::pointwise(1 + k % 4); }

// Directions that dominating families can track: anything pointwise, the
// axis in the lex plane.
RationalVector direction(std::mt19937_64& rng, const SpaceSpec& s) {
  RationalVector d = random_vector(rng, s.dimension());
  if (s.family() == Family::Lex) d[0] = 0;
  return d;
}

// Nonzero positive base dominating |d|.
RationalVector base_for(const SpaceSpec& s, const RationalVector& d) {
  RationalVector b = oracle::magnitude(s, d);
  if (b.is_zero()) b[s.dimension() - 1] = 1;
  return b;
}

Rational ratio(std::mt19937_64& rng) {
  static const Rational choices[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(3, 4)};
  return choices[random_index(rng, 4)];
}

CertifiedSequence certified(std::mt19937_64& rng, const SpaceSpec& s) {
  const RationalVector x = random_vector(rng, s.dimension());
  const RationalVector d = direction(rng, s);
  switch (random_index(rng, 3)) {
    case 0:
      return {SequenceSpec::closed_form(x, d, CoefficientKind::Harmonic), x,
              DominatingFamily::harmonic(base_for(s, d))};
    case 1: {
      const Rational r = ratio(rng);
      return {SequenceSpec::closed_form(x, d, CoefficientKind::Geometric, r), x,
              DominatingFamily::geometric(base_for(s, d), r)};
    }
    default:
      return {SequenceSpec::closed_form(x, d, CoefficientKind::AlternatingHarmonic), x,
              DominatingFamily::harmonic(base_for(s, d))};
  }
}

}  // namespace

SuiteResult run_convergence_suite(const SuiteOptions& options) {
  SuiteResult suite{"convergence", {}};
  const std::size_t horizon = options.horizon;

  {
    Check c(suite, "convergence.certificates-accepted",
            "x + d/n, x + r^n d and x + (-1)^n d/n converge to x under their harmonic or geometric families",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const SpaceSpec s = space_for(k);
      const CertifiedSequence seq = certified(c.rng(), s);
      c.run([&](std::string& d) {
        d = seq.sequence.describe() + " -> " + v(seq.limit) + " by " + seq.family.describe();
        const CertificateReport r = check_convergence_certificate(s, seq.sequence, seq.limit, seq.family, horizon);
        return r.accepted() && r.verified_horizon == horizon && r.inf_zero_status == InfZeroStatus::Analytic;
      });
    }
  }
  {
    Check c(suite, "convergence.constant-offset-rejected",
            "x + d with d nonzero fails the harmonic family of |d| first at n = 2", options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const SpaceSpec s = space_for(k);
      const RationalVector x = random_vector(c.rng(), s.dimension());
      RationalVector d = direction(c.rng(), s);
      if (d.is_zero()) d[s.dimension() - 1] = -2;
      c.run([&](std::string& detail) {
        detail = "x=" + v(x) + " d=" + v(d);
        const auto seq = SequenceSpec::closed_form(x, d, CoefficientKind::Constant);
        const CertificateReport r =
            check_convergence_certificate(s, seq, x, DominatingFamily::harmonic(oracle::magnitude(s, d)),
                                          std::max<std::size_t>(horizon, 2));
        return !r.accepted() && !r.violations.empty() && r.violations.front().n == 2;
      });
    }
  }
  {
    Check c(suite, "convergence.limit-unique",
            "a certified sequence rejects every other candidate limit under the same family", options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const SpaceSpec s = space_for(k);
      const CertifiedSequence seq = certified(c.rng(), s);
      RationalVector shift = random_vector(c.rng(), s.dimension());
      if (shift.is_zero()) shift[0] = 1;
      const RationalVector other = seq.limit + shift;
      c.run([&](std::string& d) {
        d = seq.sequence.describe() + " other limit " + v(other);
        const std::size_t h = std::max<std::size_t>(horizon, kDefaultHorizon);
        return check_convergence_certificate(s, seq.sequence, seq.limit, seq.family, h).accepted() &&
               !check_convergence_certificate(s, seq.sequence, other, seq.family, h).accepted();
      });
    }
  }
  {
    Check c(suite, "convergence.monotone-limit",
            "increasing sequences reach their limit; prefixes with a constant tail need the tail as limit; "
            "oscillation is refused at index 2",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const SpaceSpec s = space_for(k);
      const RationalVector x = random_vector(c.rng(), s.dimension());
      RationalVector d = oracle::magnitude(s, direction(c.rng(), s));
      if (d.is_zero()) d[s.dimension() - 1] = 1;
      c.run([&](std::string& detail) {
        detail = "x=" + v(x) + " d=" + v(d);
        const auto rising = SequenceSpec::closed_form(x, -d, CoefficientKind::Harmonic);
        bool ok = check_monotone_limit(s, rising, x, horizon, DominatingFamily::harmonic(d)).accepted();

        std::vector<RationalVector> prefix{x - Rational(3) * d, x - Rational(2) * d, x - d};
        const auto stepped = SequenceSpec::prefix(prefix, x);
        ok = ok && check_monotone_limit(s, stepped, x, horizon).accepted();
        ok = ok && !check_monotone_limit(s, stepped, x + d, horizon).accepted();

        try {
          check_monotone_limit(s, SequenceSpec::closed_form(x, d, CoefficientKind::Alternating), x, horizon);
          detail += "; oscillation accepted";
          ok = false;
        } catch (const Error& e) {
          ok = ok && e.code() == ErrorCode::NotMonotone &&
               std::string(e.what()).find("not increasing at index 2") != std::string::npos;
        }
        return ok;
      });
    }
  }
  {
    Check c(suite, "convergence.sandwich",
            "a sequence between two certified sequences with a common limit converges under the summed family",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const SpaceSpec s = space_for(k);
      const RationalVector x = random_vector(c.rng(), s.dimension());
      RationalVector d = oracle::magnitude(s, direction(c.rng(), s));
      if (d.is_zero()) d[s.dimension() - 1] = 1;
      c.run([&](std::string& detail) {
        detail = "x=" + v(x) + " d=" + v(d);
        const auto lower = SequenceSpec::closed_form(x, -d, CoefficientKind::Harmonic);
        const auto upper = SequenceSpec::closed_form(x, d, CoefficientKind::Harmonic);
        const auto middle = SequenceSpec::closed_form(x, Rational(1, 2) * d, CoefficientKind::AlternatingHarmonic);
        const DominatingFamily f = DominatingFamily::harmonic(d);
        bool ok = check_convergence_certificate(s, lower, x, f, horizon).accepted() &&
                  check_convergence_certificate(s, upper, x, f, horizon).accepted();
        for (std::size_t n = 1; n <= horizon && ok; ++n) {
          ok = oracle::below(s, lower.at(s, n), middle.at(s, n)) && oracle::below(s, middle.at(s, n), upper.at(s, n));
        }
        return ok && check_convergence_certificate(s, middle, x, f + f, horizon).accepted();
      });
    }
  }
  {
    Check c(suite, "convergence.limit-laws",
            "certificates carry over to a x_n + b y_n, positive and negative parts, absolute values, joins and meets",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const SpaceSpec s = space_for(k);
      const CertifiedSequence first = certified(c.rng(), s);
      const CertifiedSequence second = certified(c.rng(), s);
      Rational a = random_rational(c.rng(), 5, 2);
      const Rational b = random_rational(c.rng(), 5, 2);
      if (sgn(a) == 0 && sgn(b) == 0) a = 1;
      c.run([&](std::string& d) {
        d = first.sequence.describe() + " and " + second.sequence.describe() + " a=" + format_rational(a) +
            " b=" + format_rational(b);
        const LimitLawReport r = check_limit_laws(s, first, second, a, b, horizon);
        for (const auto& law : r.checks) {
          if (!law.report.accepted()) d += "; " + law.law + " rejected";
          if (law.law == "positive part" && law.derived.limit != oracle::max_of(s, first.limit, s.zero())) {
            d += "; positive part limit " + v(law.derived.limit);
            return false;
          }
        }
        return r.all_accepted() && r.checks.size() == 6;
      });
    }
  }
  {
    Check c(suite, "convergence.band-closed",
            "increasing certified sequences of positive members of a band converge inside the band", options.seed);
    std::vector<SpaceSpec> spaces;
    for (std::size_t dim = 1; dim <= 4; ++dim) spaces.push_back(SpaceSpec::pointwise(dim));
    spaces.push_back(SpaceSpec::lex());
    for (const SpaceSpec& s : spaces) {
      for (const Handle& h : all_handles(s)) {
        for (std::size_t k = 0; k < 4; ++k) {
          RationalVector x = oracle::magnitude(s, oracle::random_member(c.rng(), s, h));
          c.run([&](std::string& d) {
            d = format_handle(h) + " limit " + v(x);
            // Pointwise: x_n = (1 - 1/n) x. Lex: x_n = x - (0, t)/n with
            // (0, t) in h, so the differences stay on the axis.
            RationalVector step = x;
            if (s.family() == Family::Lex) {
              step = s.zero();
              if (h.kind() != LexKind::Zero) step[1] = sgn(x[0]) > 0 ? Rational(1) : x[1];
            }
            const auto seq = SequenceSpec::closed_form(x, -step, CoefficientKind::Harmonic);
            const RationalVector base = step.is_zero() ? base_for(s, s.zero()) : step;
            const ClosednessVerdict verdict =
                check_order_closed_under(s, h, seq, x, DominatingFamily::harmonic(base), horizon);
            return verdict.limit_in_handle && verdict.certificate.accepted();
          });
        }
      }
    }
  }
  {
    Check c(suite, "convergence.family-validation",
            "dominating families decrease term by term; zero, negative and off-axis bases and ratios outside "
            "(0, 1) are refused",
            options.seed);
    for (std::size_t k = 0; k < options.cases; ++k) {
      const SpaceSpec s = space_for(k);
      const RationalVector base = base_for(s, direction(c.rng(), s));
      const DominatingFamily f = coin(c.rng()) ? DominatingFamily::harmonic(base)
                                               : DominatingFamily::geometric(base, ratio(c.rng()));
      c.run([&](std::string& d) {
        d = f.describe();
        validate_family(s, f);
        bool ok = true;
        for (std::size_t n = 1; n < 32 && ok; ++n) ok = oracle::below(s, f.at(n + 1), f.at(n));
        const auto refused = [&](const DominatingFamily& bad) {
          try {
            validate_family(s, bad);
            d += "; accepted " + bad.describe();
            return false;
          } catch (const Error& e) {
            return e.code() == ErrorCode::SpecError;
          }
        };
        RationalVector off_axis = base;
        off_axis[0] = 1;
        ok = ok && refused(DominatingFamily::harmonic(s.zero())) && refused(DominatingFamily::harmonic(-base)) &&
             refused(DominatingFamily::geometric(base, Rational(1))) &&
             refused(DominatingFamily::geometric(base, Rational(0)));
        if (s.family() == Family::Lex) ok = ok && refused(DominatingFamily::harmonic(off_axis));
        return ok;
      });
    }
  }
  return suite;
}

}  // namespace fuzzy::checks
