#include <array>

#include "fuzzy/checks/oracles.hpp"
#include "fuzzy/checks/suite.hpp"
#include "fuzzy/error.hpp"
#include "fuzzy/riesz.hpp"

namespace fuzzy::checks {

namespace {

using oracle::below;

std::string v(const RationalVector& x) { return format_vector(x); }

// Pointwise spaces cycle through dimensions 1..4 and three grades c; the lex
// plane cycles through the same grades.
SpaceSpec space_for(Family f, std::size_t k) {
  static const std::array<Rational, 3> grades{Rational(2, 3), Rational(3, 4), Rational(1)};
  const Rational& c = grades[k % grades.size()];
  if (f == Family::Lex) return SpaceSpec::lex(c);
  return SpaceSpec::pointwise(1 + k % 4, c);
}

// Runs `body` for `cases` instances of each family.
template <typename Body>
void per_family(Check& c, std::size_t cases, Body body) {
  for (Family f : {Family::Pointwise, Family::Lex}) {
    for (std::size_t k = 0; k < cases; ++k) {
      const SpaceSpec s = space_for(f, k);
      c.run([&](std::string& detail) {
        detail = std::string(to_string(f)) + " dim " + std::to_string(s.dimension()) + ": ";
        return body(s, detail);
      });
    }
  }
}

RationalVector rv(Check& c, const SpaceSpec& s) { return random_vector(c.rng(), s.dimension()); }

Rational signed_fraction(std::mt19937_64& rng) {
  Rational t = random_unit_fraction(rng);
  return coin(rng) ? t : Rational(-t);
}

// Random x with |x| below s, where s is positive.
RationalVector dominated_by(std::mt19937_64& rng, const SpaceSpec& sp, const RationalVector& s) {
  RationalVector x = sp.zero();
  if (sp.family() == Family::Lex) {
    if (sgn(s[0]) > 0) {
      const Rational t = signed_fraction(rng);
      if (t == 1 || t == -1) return t * s;
      x[0] = t * s[0];
      x[1] = random_rational(rng);
      return x;
    }
    x[1] = signed_fraction(rng) * s[1];
    return x;
  }
  for (std::size_t j = 0; j < s.dimension(); ++j) x[j] = signed_fraction(rng) * s[j];
  return x;
}

}  // namespace

SuiteResult run_riesz_suite(const SuiteOptions& options) {
  SuiteResult suite{"riesz", {}};
  const std::size_t n = options.cases;

  {
    Check c(suite, "riesz.grade-definition", "mu is 1 on equality, c on strict precedence and 0 otherwise",
            options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      const RationalVector x = rv(c, s);
      const RationalVector y = coin(c.rng()) ? x + random_positive(c.rng(), s) : rv(c, s);
      const Rational expected = x == y ? Rational(1) : (below(s, x, y) ? s.grade_c() : Rational(0));
      d += "x=" + v(x) + " y=" + v(y);
      return mu(s, x, y).value() == expected;
    });
  }
  {
    Check c(suite, "riesz.order-compatibility", "mu(x, y) <= mu(x + z, y + z) and mu(x, y) <= mu(lx, ly) for l >= 0",
            options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      const RationalVector x = rv(c, s);
      const RationalVector y = coin(c.rng()) ? x + random_positive(c.rng(), s) : rv(c, s);
      const RationalVector z = rv(c, s);
      const Rational l = ::abs(random_rational(c.rng()));
      d += "x=" + v(x) + " y=" + v(y) + " z=" + v(z) + " l=" + format_rational(l);
      return mu(s, x, y) <= mu(s, x + z, y + z) && mu(s, x, y) <= mu(s, l * x, l * y);
    });
  }
  {
    Check c(suite, "riesz.positive-cone",
            "cone closed under sums and nonnegative scaling, pointed, order reversed by nonpositive scalars, "
            "and ax before bx for a <= b on positive x",
            options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      const RationalVector p = random_positive(c.rng(), s);
      const RationalVector q = random_positive(c.rng(), s);
      const RationalVector x = rv(c, s);
      const RationalVector x1 = rv(c, s);
      const RationalVector x2 = x1 + random_positive(c.rng(), s);
      Rational a = random_rational(c.rng());
      Rational b = random_rational(c.rng());
      if (a > b) std::swap(a, b);
      const Rational nonpos = -::abs(a);
      d += "p=" + v(p) + " q=" + v(q) + " x=" + v(x) + " x1=" + v(x1) + " x2=" + v(x2) + " a=" +
           format_rational(a) + " b=" + format_rational(b);
      const bool sums = is_positive(s, p + q);
      const bool pointed = !(is_positive(s, x) && is_positive(s, -x)) || x.is_zero();
      const bool scaling = is_positive(s, ::abs(a) * p);
      const bool reversal = precedes(s, nonpos * x2, nonpos * x1);
      const bool ordered_multiples = precedes(s, a * p, b * p);
      return sums && pointed && scaling && reversal && ordered_multiples;
    });
  }
  {
    Check c(suite, "riesz.join-is-supremum",
            "join and meet equal the coordinatewise/lexicographic max and min and are least/greatest bounds",
            options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      const RationalVector x = rv(c, s);
      const RationalVector y = rv(c, s);
      const RationalVector j = join(s, x, y);
      const RationalVector m = meet(s, x, y);
      const RationalVector upper = oracle::max_of(s, x, y) + random_positive(c.rng(), s);
      const RationalVector lower = oracle::min_of(s, x, y) - random_positive(c.rng(), s);
      d += "x=" + v(x) + " y=" + v(y) + " join=" + v(j) + " meet=" + v(m);
      return j == oracle::max_of(s, x, y) && m == oracle::min_of(s, x, y) && precedes(s, x, j) &&
             precedes(s, y, j) && precedes(s, j, upper) && precedes(s, m, x) && precedes(s, m, y) &&
             precedes(s, lower, m);
    });
  }
  {
    Check c(suite, "riesz.scaled-extrema", "join(lx, ly) = l join(x, y) for l >= 0 and meet(lx, ly) = l join(x, y) "
                                           "for l < 0",
            options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      const RationalVector x = rv(c, s);
      const RationalVector y = rv(c, s);
      Rational l = random_rational(c.rng());
      d += "x=" + v(x) + " y=" + v(y) + " l=" + format_rational(l);
      if (sgn(l) >= 0) return join(s, l * x, l * y) == l * join(s, x, y);
      return meet(s, l * x, l * y) == l * join(s, x, y);
    });
  }
  {
    Check c(suite, "riesz.translated-suprema", "the join of all x_j + y_l is the join of the x_j plus the join of the y_l",
            options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      const std::array<RationalVector, 2> xs{rv(c, s), rv(c, s)};
      const std::array<RationalVector, 3> ys{rv(c, s), rv(c, s), rv(c, s)};
      RationalVector lhs = xs[0] + ys[0];
      for (const auto& a : xs) {
        for (const auto& b : ys) lhs = join(s, lhs, a + b);
      }
      const RationalVector rhs = join(s, xs[0], xs[1]) + join(s, join(s, ys[0], ys[1]), ys[2]);
      d += "x=" + v(xs[0]) + "," + v(xs[1]) + " y=" + v(ys[0]) + "," + v(ys[1]) + "," + v(ys[2]);
      return lhs == rhs;
    });
  }
  {
    Check c(suite, "riesz.part-identities",
            "x = x+ - x-, x+ and x- are positive and disjoint, |x| = x+ + x-, x+ = x v 0", options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      const RationalVector x = rv(c, s);
      const RationalVector p = pos_part(s, x);
      const RationalVector q = neg_part(s, x);
      d += "x=" + v(x) + " x+=" + v(p) + " x-=" + v(q);
      return x == p - q && is_positive(s, p) && is_positive(s, q) && oracle::orthogonal(s, p, q) &&
             abs(s, x) == p + q && p == oracle::max_of(s, x, s.zero());
    });
  }
  {
    Check c(suite, "riesz.absolute-value-laws",
            "|x + y| <= |x| + |y|, |lx| = |l||x|, |x| - |y| <= |x - y|, |x - y| = x v y - x ^ y", options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      const RationalVector x = rv(c, s);
      const RationalVector y = rv(c, s);
      const Rational l = random_rational(c.rng());
      d += "x=" + v(x) + " y=" + v(y) + " l=" + format_rational(l);
      return abs(s, x) == oracle::magnitude(s, x) && precedes(s, abs(s, x + y), abs(s, x) + abs(s, y)) &&
             abs(s, l * x) == ::abs(l) * abs(s, x) && precedes(s, abs(s, x) - abs(s, y), abs(s, x - y)) &&
             abs(s, x - y) == join(s, x, y) - meet(s, x, y);
    });
  }
  {
    Check c(suite, "riesz.part-subadditivity",
            "(x + y)+ <= x+ + y+, (x + y)- <= x- + y-, (lx)+ = l x+ and (lx)- = l x- for l > 0", options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      const RationalVector x = rv(c, s);
      const RationalVector y = rv(c, s);
      Rational l = ::abs(random_rational(c.rng()));
      if (sgn(l) == 0) l = 1;
      d += "x=" + v(x) + " y=" + v(y) + " l=" + format_rational(l);
      return precedes(s, pos_part(s, x + y), pos_part(s, x) + pos_part(s, y)) &&
             precedes(s, neg_part(s, x + y), neg_part(s, x) + neg_part(s, y)) &&
             pos_part(s, l * x) == l * pos_part(s, x) && neg_part(s, l * x) == l * neg_part(s, x);
    });
  }
  {
    Check c(suite, "riesz.join-plus-meet", "x + y = x v y + x ^ y", options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      const RationalVector x = rv(c, s);
      const RationalVector y = rv(c, s);
      d += "x=" + v(x) + " y=" + v(y);
      return x + y == join(s, x, y) + meet(s, x, y);
    });
  }
  {
    Check c(suite, "riesz.decomposition",
            "dominated x splits into parts summing to x with |x_i| <= |y_i|, positive parts for positive x, "
            "and undominated x is rejected",
            options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      const std::size_t k = 1 + random_index(c.rng(), 4);
      std::vector<RationalVector> ys;
      RationalVector sum = s.zero();
      for (std::size_t i = 0; i < k; ++i) {
        ys.push_back(rv(c, s));
        sum += ys.back();
      }
      const RationalVector bound = oracle::magnitude(s, sum);
      RationalVector x = dominated_by(c.rng(), s, bound);
      const bool positive_case = coin(c.rng());
      if (positive_case) x = oracle::magnitude(s, x);
      d += "x=" + v(x) + " ys=";
      for (const auto& y : ys) d += v(y) + " ";
      const DecompositionResult r = riesz_decompose(s, x, ys);
      RationalVector total = s.zero();
      bool ok = r.parts.size() == ys.size();
      for (std::size_t i = 0; ok && i < ys.size(); ++i) {
        total += r.parts[i];
        ok = below(s, oracle::magnitude(s, r.parts[i]), oracle::magnitude(s, ys[i]));
        if (positive_case) ok = ok && below(s, s.zero(), r.parts[i]);
      }
      ok = ok && total == x;
      // A vector strictly above the bound in some coordinate is not dominated.
      RationalVector outside = bound;
      outside[s.family() == Family::Lex ? 0 : random_index(c.rng(), s.dimension())] += 1;
      try {
        riesz_decompose(s, outside, ys);
        d += "; undominated " + v(outside) + " accepted";
        ok = false;
      } catch (const Error& e) {
        ok = ok && e.code() == ErrorCode::NotDominated;
      }
      return ok;
    });
  }
  {
    Check c(suite, "riesz.disjoint-combinations",
            "x orthogonal to x1 and x2 is orthogonal to a x1 + b x2 and to x1 v x2; disjointness matches the "
            "definition",
            options.seed);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      RationalVector x = rv(c, s);
      RationalVector x1 = rv(c, s);
      RationalVector x2 = rv(c, s);
      if (s.family() == Family::Lex) {
        if (coin(c.rng())) x = s.zero();
        else x1 = x2 = s.zero();
      } else {
        for (std::size_t j = 0; j < s.dimension(); ++j) {
          if (coin(c.rng())) x[j] = 0;
          else x1[j] = x2[j] = 0;
        }
      }
      const Rational a = random_rational(c.rng());
      const Rational b = random_rational(c.rng());
      const RationalVector free = rv(c, s);
      d += "x=" + v(x) + " x1=" + v(x1) + " x2=" + v(x2) + " a=" + format_rational(a) + " b=" + format_rational(b);
      return is_disjoint(s, x, x1) && is_disjoint(s, x, x2) && is_disjoint(s, x, a * x1 + b * x2) &&
             is_disjoint(s, x, join(s, x1, x2)) && is_disjoint(s, x, free) == oracle::orthogonal(s, x, free);
    });
  }
  {
    Check c(suite, "riesz.archimedean-evidence",
            "pointwise multiples nx of a nonzero positive x escape every bound; in the lex plane n(0,1) stays "
            "below (1,0) and x/n has no infimum off the axis",
            options.seed);
    const std::size_t horizon = std::min<std::size_t>(options.horizon, 64);
    per_family(c, n, [&](const SpaceSpec& s, std::string& d) {
      RationalVector x = random_positive(c.rng(), s);
      if (x.is_zero()) x = RationalVector::unit(s.dimension(), s.dimension() - 1);
      const RationalVector y = random_vector(c.rng(), s.dimension());
      d += "x=" + v(x) + " y=" + v(y);
      const BoundednessReport r = is_nx_bounded(s, x, y, horizon);
      bool all = true;
      for (std::size_t m = 1; m <= horizon; ++m) all = all && below(s, Rational(static_cast<long>(m)) * x, y);
      bool ok = r.all_checks_pass == all;
      const SpaceProperties props = space_properties(s);
      const auto inf = infimum_of_scaled(s, x);
      if (s.family() == Family::Pointwise) {
        ok = ok && props.archimedean && !r.closed_form_bounded && !r.all_checks_pass && inf && inf->is_zero();
      } else {
        ok = ok && !props.archimedean && props.witness &&
             is_nx_bounded(s, props.witness->first, props.witness->second, horizon).all_checks_pass;
        ok = ok && (sgn(x[0]) > 0 ? !inf.has_value() : (inf && inf->is_zero()));
      }
      return ok;
    });
  }
  return suite;
}

}  // namespace fuzzy::checks
