#include "fuzzy/riesz.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fuzzy/error.hpp"

namespace fuzzy {

RationalVector RationalVector::unit(std::size_t dimension, std::size_t index) {
  RationalVector v(dimension);
  v[index] = 1;
  return v;
}

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
  if (other.dimension() != dimension()) fail(ErrorCode::DimensionError, "vector sum dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
  if (other.dimension() != dimension()) {
    fail(ErrorCode::DimensionError, "vector difference dimension mismatch");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

std::string format_vector(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  return out + ")";
}

RationalVector parse_vector(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() >= 2 && ((s.front() == '(' && s.back() == ')') || (s.front() == '[' && s.back() == ']'))) {
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto piece = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
    coords.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RationalVector(std::move(coords));
}

std::string_view to_string(Family f) noexcept {
  return f == Family::Pointwise ? "pointwise" : "lex";
}

SpaceSpec::SpaceSpec(Family family, std::size_t dimension, Rational grade_c)
    : family_(family), dimension_(dimension), grade_c_(std::move(grade_c)) {
  grade_c_.canonicalize();
  if (dimension_ == 0) fail(ErrorCode::InvalidSpace, "space dimension must be positive");
  if (family_ == Family::Lex && dimension_ != 2) {
    fail(ErrorCode::InvalidSpace, "the lex family is defined on the plane only (dimension 2)");
  }
  if (grade_c_ <= one_half() || grade_c_ > 1) {
    fail(ErrorCode::InvalidSpace, "grade_c must lie in (1/2, 1], got " + format_rational(grade_c_));
  }
}

void check_dimension(const SpaceSpec& s, const RationalVector& v) {
  if (v.dimension() != s.dimension()) {
    fail(ErrorCode::DimensionError, "vector " + format_vector(v) + " has dimension " +
                                        std::to_string(v.dimension()) + ", space has " +
                                        std::to_string(s.dimension()));
  }
}

namespace {

// -1, 0, 1 for x <_lex y, x == y, x >_lex y.
int lex_compare(const RationalVector& x, const RationalVector& y) {
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    const int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

bool pointwise_leq(const RationalVector& x, const RationalVector& y) {
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

}  // namespace

Grade mu(const SpaceSpec& s, const RationalVector& x, const RationalVector& y) {
  check_dimension(s, x);
  check_dimension(s, y);
  if (x == y) return Grade::one();
  const bool strict =
      s.family() == Family::Pointwise ? pointwise_leq(x, y) : lex_compare(x, y) < 0;
  return strict ? Grade(s.grade_c()) : Grade::zero();
}

bool is_positive(const SpaceSpec& s, const RationalVector& x) { return precedes(s, s.zero(), x); }

RationalVector join(const SpaceSpec& s, const RationalVector& x, const RationalVector& y) {
  check_dimension(s, x);
  check_dimension(s, y);
  if (s.family() == Family::Lex) return lex_compare(x, y) >= 0 ? x : y;
  RationalVector out(x.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) out[i] = x[i] >= y[i] ? x[i] : y[i];
  return out;
}

RationalVector meet(const SpaceSpec& s, const RationalVector& x, const RationalVector& y) {
  check_dimension(s, x);
  check_dimension(s, y);
  if (s.family() == Family::Lex) return lex_compare(x, y) <= 0 ? x : y;
  RationalVector out(x.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) out[i] = x[i] <= y[i] ? x[i] : y[i];
  return out;
}

RationalVector pos_part(const SpaceSpec& s, const RationalVector& x) {
#ifdef FUZZY_LITERAL_POSITIVE_PART
  // Mutant build: the positive part read literally as x ^ 0.
  return meet(s, x, s.zero());
#else
  return join(s, x, s.zero());
#endif
}

RationalVector neg_part(const SpaceSpec& s, const RationalVector& x) { return join(s, -x, s.zero()); }

RationalVector abs(const SpaceSpec& s, const RationalVector& x) { return join(s, x, -x); }

DecompositionResult riesz_decompose(const SpaceSpec& s, const RationalVector& x,
                                    std::span<const RationalVector> ys) {
  check_dimension(s, x);
  RationalVector total = s.zero();
  for (const auto& y : ys) {
    check_dimension(s, y);
    total += y;
  }
  if (!precedes(s, abs(s, x), abs(s, total))) {
    fail(ErrorCode::NotDominated, "|x| = " + format_vector(abs(s, x)) + " is not dominated by |sum y| = " +
                                      format_vector(abs(s, total)));
  }
  DecompositionResult result;
  if (ys.empty()) return result;  // x == 0 here
  RationalVector remainder = x;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    const RationalVector bound = abs(s, ys[i]);
    RationalVector part = meet(s, join(s, -bound, remainder), bound);
    remainder -= part;
    result.parts.push_back(std::move(part));
  }
  result.parts.push_back(std::move(remainder));
  return result;
}

bool is_disjoint(const SpaceSpec& s, const RationalVector& x, const RationalVector& y) {
  return meet(s, abs(s, x), abs(s, y)).is_zero();
}

BoundednessReport is_nx_bounded(const SpaceSpec& s, const RationalVector& x, const RationalVector& y,
                                std::size_t horizon) {
  check_dimension(s, x);
  check_dimension(s, y);
  BoundednessReport report;
  report.horizon = horizon;
  RationalVector multiple = s.zero();
  for (std::size_t n = 1; n <= horizon; ++n) {
    multiple += x;
    if (!precedes(s, multiple, y)) {
      report.all_checks_pass = false;
      report.first_failure = n;
      break;
    }
  }
  if (s.family() == Family::Pointwise) {
    report.closed_form_bounded = std::none_of(x.coordinates().begin(), x.coordinates().end(),
                                              [](const Rational& c) { return sgn(c) > 0; });
  } else {
    report.closed_form_bounded = sgn(x[0]) <= 0;
  }
  return report;
}

std::optional<RationalVector> infimum_of_scaled(const SpaceSpec& s, const RationalVector& x) {
  check_dimension(s, x);
  if (!is_positive(s, x)) fail(ErrorCode::NotPositive, format_vector(x) + " is not positive");
  if (s.family() == Family::Lex && sgn(x[0]) != 0) return std::nullopt;
  return s.zero();
}

SpaceProperties space_properties(const SpaceSpec& s) {
  SpaceProperties p;
  if (s.family() == Family::Pointwise) {
    p.archimedean = true;
    p.dedekind_note =
        "real model R^" + std::to_string(s.dimension()) +
        " with the coordinatewise order is Dedekind complete; the exact-rational carrier is not "
        "(suprema of rational sets may be irrational), so completeness is exercised on finite, "
        "exactly representable instances only";
  } else {
    p.archimedean = false;
    p.witness = std::make_pair(RationalVector{0, 1}, RationalVector{1, 0});
    p.dedekind_note =
        "lexicographic plane is not Dedekind complete (not even sigma-complete): {n(0,1)} is "
        "bounded above by (1,0) but has no supremum";
  }
  return p;
}

RationalVector random_vector(std::mt19937_64& rng, std::size_t dimension,
                             const VectorGeneratorOptions& options) {
  std::uniform_int_distribution<int> num(-options.max_numerator, options.max_numerator);
  std::uniform_int_distribution<std::size_t> den(0, options.denominators.size() - 1);
  std::bernoulli_distribution zero(options.zero_probability);
  RationalVector v(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    if (zero(rng)) continue;
    v[i] = Rational(num(rng), options.denominators[den(rng)]);
    v[i].canonicalize();
  }
  return v;
}

RationalVector random_positive(std::mt19937_64& rng, const SpaceSpec& s,
                               const VectorGeneratorOptions& options) {
  const RationalVector v = random_vector(rng, s.dimension(), options);
  if (s.family() == Family::Pointwise) {
    RationalVector out(v.dimension());
    for (std::size_t i = 0; i < v.dimension(); ++i) out[i] = sgn(v[i]) < 0 ? Rational(-v[i]) : v[i];
    return out;
  }
  return fuzzy::abs(s, v);
}

}  // namespace fuzzy
