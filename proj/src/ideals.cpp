#include "fuzzy/ideals.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "fuzzy/error.hpp"
#include "fuzzy/matrix.hpp"

namespace fuzzy {

std::string_view to_string(LexKind k) noexcept {
  switch (k) {
    case LexKind::Zero: return "zero";
    case LexKind::Axis: return "axis";
    case LexKind::Full: return "full";
  }
  return "zero";
}

Handle Handle::pointwise(std::size_t dimension, std::vector<std::size_t> support) {
  if (dimension == 0) fail(ErrorCode::InvalidHandle, "pointwise handle needs a positive dimension");
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (auto j : support) {
    if (j == 0 || j > dimension) {
      fail(ErrorCode::InvalidHandle, "support index " + std::to_string(j) + " outside 1.." +
                                         std::to_string(dimension));
    }
  }
  Handle h;
  h.family_ = Family::Pointwise;
  h.dimension_ = dimension;
  h.support_ = std::move(support);
  return h;
}

Handle Handle::lex(LexKind kind) {
  Handle h;
  h.family_ = Family::Lex;
  h.dimension_ = 2;
  h.kind_ = kind;
  return h;
}

Handle Handle::zero(const SpaceSpec& s) {
  return s.family() == Family::Lex ? lex(LexKind::Zero) : pointwise(s.dimension(), {});
}

Handle Handle::full(const SpaceSpec& s) {
  if (s.family() == Family::Lex) return lex(LexKind::Full);
  return from_mask(std::vector<bool>(s.dimension(), true));
}

Handle Handle::from_mask(const std::vector<bool>& mask) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) support.push_back(i + 1);
  }
  return pointwise(mask.size(), std::move(support));
}

std::vector<bool> Handle::mask() const {
  std::vector<bool> m(dimension_, false);
  for (auto j : support_) m[j - 1] = true;
  return m;
}

bool Handle::is_zero() const noexcept {
  return family_ == Family::Lex ? kind_ == LexKind::Zero : support_.empty();
}

bool Handle::is_full() const noexcept {
  return family_ == Family::Lex ? kind_ == LexKind::Full : support_.size() == dimension_;
}

void check_handle(const SpaceSpec& s, const Handle& h) {
  if (h.family() != s.family() || h.dimension() != s.dimension()) {
    fail(ErrorCode::InvalidHandle, format_handle(h) + " does not belong to a " +
                                       std::string(to_string(s.family())) + " space of dimension " +
                                       std::to_string(s.dimension()));
  }
}

std::string format_handle(const Handle& h) {
  if (h.family() == Family::Lex) return "lex " + std::string(to_string(h.kind()));
  std::string out = "pointwise support {";
  for (std::size_t i = 0; i < h.support().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(h.support()[i]);
  }
  return out + "}";
}

bool solid_hull_contains(const SpaceSpec& s, std::span<const RationalVector> A, const RationalVector& x) {
  check_dimension(s, x);
  const RationalVector ax = abs(s, x);
  return std::any_of(A.begin(), A.end(), [&](const RationalVector& y) { return precedes(s, ax, abs(s, y)); });
}

namespace {

bool contains_vector(std::span<const RationalVector> A, const RationalVector& x) {
  return std::find(A.begin(), A.end(), x) != A.end();
}

// Grid radius R with (2R + 1)^d at most kGridPoints.
constexpr std::size_t kGridPoints = 4096;

long grid_radius(std::size_t dimension, const RationalVector& bound) {
  long r = 0;
  for (std::size_t i = 0; i < bound.dimension(); ++i) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), bound[i].get_num_mpz_t(), bound[i].get_den_mpz_t());
    if (c.fits_slong_p()) r = std::max(r, c.get_si());
    else r = std::numeric_limits<long>::max();
  }
  while (r > 0) {
    std::size_t points = 1;
    bool fits = true;
    for (std::size_t i = 0; i < dimension && fits; ++i) {
      points *= static_cast<std::size_t>(2 * r + 1);
      fits = points <= kGridPoints;
    }
    if (fits) break;
    r = std::min(r - 1, 8L);
  }
  return r;
}

}  // namespace

SolidityReport is_solid(const SpaceSpec& s, std::span<const RationalVector> A) {
  SolidityReport report;
  for (const auto& y : A) check_dimension(s, y);
  for (const auto& y : A) {
    const RationalVector ay = abs(s, y);
    const auto test = [&](const RationalVector& x) {
      if (precedes(s, abs(s, x), ay) && !contains_vector(A, x)) {
        report.solid = false;
        report.witness = std::make_pair(x, y);
        return false;
      }
      return true;
    };
    RationalVector half(s.dimension());
    for (std::size_t i = 0; i < half.dimension(); ++i) {
      mpz_class q;
      mpz_tdiv_q(q.get_mpz_t(), ay[i].get_num_mpz_t(), ay[i].get_den_mpz_t());
      mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), 2);
      half[i] = Rational(q);
    }
    for (const auto& probe : {half, s.zero(), ay, RationalVector(-y)}) {
      if (!test(probe)) return report;
    }
    const long r = grid_radius(s.dimension(), ay);
    std::vector<long> point(s.dimension(), -r);
    while (true) {
      RationalVector z(s.dimension());
      for (std::size_t i = 0; i < z.dimension(); ++i) z[i] = point[i];
      if (!test(z)) return report;
      std::size_t i = 0;
      while (i < point.size() && point[i] == r) point[i++] = -r;
      if (i == point.size()) break;
      ++point[i];
    }
  }
  return report;
}

SubspaceReport is_riesz_subspace(const SpaceSpec& s, std::span<const RationalVector> basis,
                                 std::size_t samples, std::uint64_t seed) {
  for (const auto& b : basis) check_dimension(s, b);
  if (rank(basis) < basis.size()) fail(ErrorCode::DegenerateBasis, "basis vectors are linearly dependent");
  SubspaceReport report;
  if (s.family() == Family::Lex || basis.empty()) {
    report.closed_form = true;
    return report;
  }

  std::vector<bool> support(s.dimension(), false);
  for (const auto& b : basis) {
    for (std::size_t i = 0; i < b.dimension(); ++i) {
      if (sgn(b[i]) != 0) support[i] = true;
    }
  }
  const auto support_size = static_cast<std::size_t>(std::count(support.begin(), support.end(), true));
  const bool coordinate_subspace = support_size == basis.size();
  const bool constants = basis.size() == 1 &&
                         std::all_of(basis[0].coordinates().begin(), basis[0].coordinates().end(),
                                     [&](const Rational& c) { return c == basis[0][0]; });
  if (coordinate_subspace || constants) {
    report.closed_form = true;
    return report;
  }

  const auto test = [&](const RationalVector& x, const RationalVector& y) {
    for (const auto& candidate : {join(s, x, y), meet(s, x, y)}) {
      if (!solve_in_span(basis, candidate)) {
        report.closed = false;
        report.witness = SubspaceReport::Witness{x, y, join(s, x, y)};
        return false;
      }
    }
    return true;
  };
  for (const auto& b : basis) {
    if (!test(b, -b)) return report;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!test(basis[i], basis[j]) || !test(basis[i], -basis[j])) return report;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto random_member = [&] {
    RationalVector v = s.zero();
    for (const auto& b : basis) v += Rational(coeff(rng)) * b;
    return v;
  };
  for (std::size_t k = 0; k < samples; ++k) {
    const RationalVector x = random_member();
    const RationalVector y = random_member();
    if (!test(x, y)) return report;
  }
  return report;
}

IdealHandle ideal_generated(const SpaceSpec& s, std::span<const RationalVector> D) {
  if (D.empty()) fail(ErrorCode::EmptyQuery, "generating set is empty");
  for (const auto& d : D) check_dimension(s, d);
  if (s.family() == Family::Lex) {
    const bool all_zero = std::all_of(D.begin(), D.end(), [](const RationalVector& d) { return d.is_zero(); });
    if (all_zero) return Handle::lex(LexKind::Zero);
    const bool on_axis = std::all_of(D.begin(), D.end(), [](const RationalVector& d) { return sgn(d[0]) == 0; });
    return Handle::lex(on_axis ? LexKind::Axis : LexKind::Full);
  }
  std::vector<bool> mask(s.dimension(), false);
  for (const auto& d : D) {
    for (std::size_t i = 0; i < d.dimension(); ++i) {
      if (sgn(d[i]) != 0) mask[i] = true;
    }
  }
  return Handle::from_mask(mask);
}

BandHandle band_generated(const SpaceSpec& s, std::span<const RationalVector> D) {
  return ideal_generated(s, D);
}

bool ideal_contains(const SpaceSpec& s, const Handle& h, const RationalVector& x) {
  check_handle(s, h);
  check_dimension(s, x);
  if (s.family() == Family::Lex) {
    switch (h.kind()) {
      case LexKind::Zero: return x.is_zero();
      case LexKind::Axis: return sgn(x[0]) == 0;
      case LexKind::Full: return true;
    }
  }
  const auto mask = h.mask();
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (!mask[i] && sgn(x[i]) != 0) return false;
  }
  return true;
}

namespace {

mpz_class ceil_ratio(const Rational& a, const Rational& b) {
  const Rational q = a / b;
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

mpz_class floor_ratio(const Rational& a, const Rational& b) {
  const Rational q = a / b;
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

StabilizationTrace principal_band_contains(const SpaceSpec& s, const RationalVector& x,
                                           const RationalVector& y, std::size_t cap) {
  check_dimension(s, x);
  check_dimension(s, y);
  const RationalVector ax = abs(s, x);
  const RationalVector ay = abs(s, y);
  StabilizationTrace trace;

  mpz_class bound = 1;
  if (!ax.is_zero() && !ay.is_zero()) {
    if (s.family() == Family::Pointwise) {
      mpz_class worst = 0;
      for (std::size_t j = 0; j < ax.dimension(); ++j) {
        if (sgn(ax[j]) != 0) worst = std::max(worst, ceil_ratio(ay[j], ax[j]));
      }
      bound = worst + 1;
    } else if (sgn(ax[0]) > 0) {
      bound = floor_ratio(ay[0], ax[0]) + 2;
    } else if (sgn(ay[0]) == 0) {
      bound = ceil_ratio(ay[1], ax[1]) + 1;
    } else {
      // n|x| = (0, n b) stays below |y| for every n.
      for (std::size_t n = 1; n <= 3; ++n) trace.sequence.push_back(meet(s, ay, Rational(n) * ax));
      trace.stable_value = trace.sequence.back();
      trace.note = "diverges along axis";
      return trace;
    }
  }
  if (!bound.fits_ulong_p() || bound.get_ui() > cap) {
    fail(ErrorCode::StabilizationOverflow, "stabilization bound " + bound.get_str() + " exceeds cap " +
                                               std::to_string(cap));
  }
  trace.bound = bound.get_ui();

  std::vector<RationalVector> terms;
  terms.reserve(trace.bound + 1);
  RationalVector multiple = s.zero();
  for (std::size_t n = 1; n <= trace.bound + 1; ++n) {
    multiple += ax;
    terms.push_back(meet(s, ay, multiple));
  }
  if (!(terms[trace.bound] == terms[trace.bound - 1])) {
    fail(ErrorCode::StabilizationOverflow, "sequence still moving at the precomputed bound " +
                                               std::to_string(trace.bound));
  }
  std::size_t first = trace.bound;
  while (first > 1 && terms[first - 2] == terms[trace.bound - 1]) --first;
  trace.stabilization_index = first;
  trace.stable_value = terms[trace.bound - 1];
  trace.contained = trace.stable_value == ay;
  terms.resize(std::min(terms.size(), first + 1));
  trace.sequence = std::move(terms);
  return trace;
}

BandHandle disjoint_complement(const SpaceSpec& s, const Handle& h) {
  check_handle(s, h);
  if (s.family() == Family::Lex) {
    return Handle::lex(h.kind() == LexKind::Zero ? LexKind::Full : LexKind::Zero);
  }
  auto mask = h.mask();
  mask.flip();
  return Handle::from_mask(mask);
}

BandHandle disjoint_complement(const SpaceSpec& s, std::span<const RationalVector> D) {
  if (D.empty()) return Handle::full(s);
  return disjoint_complement(s, band_generated(s, D));
}

bool is_order_dense(const SpaceSpec& s, const Handle& h) { return disjoint_complement(s, h).is_zero(); }

namespace {

int lex_rank(LexKind k) { return static_cast<int>(k); }

}  // namespace

IdealHandle ideal_sum(const SpaceSpec& s, const Handle& a, const Handle& b) {
  check_handle(s, a);
  check_handle(s, b);
  if (s.family() == Family::Lex) return lex_rank(a.kind()) >= lex_rank(b.kind()) ? a : b;
  auto mask = a.mask();
  const auto other = b.mask();
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask[i] || other[i];
  return Handle::from_mask(mask);
}

IdealHandle ideal_intersection(const SpaceSpec& s, const Handle& a, const Handle& b) {
  check_handle(s, a);
  check_handle(s, b);
  if (s.family() == Family::Lex) return lex_rank(a.kind()) <= lex_rank(b.kind()) ? a : b;
  auto mask = a.mask();
  const auto other = b.mask();
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask[i] && other[i];
  return Handle::from_mask(mask);
}

bool handle_includes(const SpaceSpec& s, const Handle& a, const Handle& b) {
  return ideal_intersection(s, a, b) == a;
}

std::optional<std::pair<RationalVector, RationalVector>> split_into_sum(const SpaceSpec& s, const Handle& a,
                                                                       const Handle& b,
                                                                       const RationalVector& x) {
  if (!ideal_contains(s, ideal_sum(s, a, b), x)) return std::nullopt;
  if (s.family() == Family::Lex) {
    if (ideal_contains(s, a, x)) return std::make_pair(x, s.zero());
    return std::make_pair(s.zero(), x);
  }
  const auto mask = a.mask();
  RationalVector first(x.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (mask[i]) first[i] = x[i];
  }
  RationalVector second = x - first;
  return std::make_pair(std::move(first), std::move(second));
}

bool is_direct_sum_decomposition(const SpaceSpec& s, const Handle& a, const Handle& b) {
  const bool direct = ideal_intersection(s, a, b).is_zero() && ideal_sum(s, a, b).is_full();
  if (direct && (disjoint_complement(s, a) != b || disjoint_complement(s, b) != a)) {
    throw std::logic_error("direct summands " + format_handle(a) + ", " + format_handle(b) +
                           " are not each other's complements");
  }
  return direct;
}

std::vector<Handle> all_handles(const SpaceSpec& s) {
  if (s.family() == Family::Lex) {
    return {Handle::lex(LexKind::Zero), Handle::lex(LexKind::Axis), Handle::lex(LexKind::Full)};
  }
  if (s.dimension() >= 20) fail(ErrorCode::InvalidSpace, "too many handles to enumerate");
  std::vector<Handle> out;
  const std::size_t n = s.dimension();
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::vector<bool> mask(n);
    for (std::size_t i = 0; i < n; ++i) mask[i] = (bits >> i) & 1u;
    out.push_back(Handle::from_mask(mask));
  }
  return out;
}

}  // namespace fuzzy
