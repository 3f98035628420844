#include "fuzzy/checks/oracles.hpp"

#include <algorithm>

#include "fuzzy/matrix.hpp"

namespace fuzzy::checks::oracle {

std::vector<bool> bounds(const MembershipMatrix& m, std::span<const ElementIndex> subset, bool upward) {
  std::vector<bool> out(m.size(), true);
  for (std::size_t y = 0; y < m.size(); ++y) {
    for (auto a : subset) {
      const Rational& g = upward ? m.grade(a, y).value() : m.grade(y, a).value();
      if (!(2 * g > 1)) out[y] = false;
    }
  }
  return out;
}

std::vector<ElementIndex> extremum_candidates(const MembershipMatrix& m, std::span<const ElementIndex> subset,
                                              bool upward) {
  const std::vector<bool> b = bounds(m, subset, upward);
  std::vector<ElementIndex> out;
  for (std::size_t z = 0; z < m.size(); ++z) {
    if (!b[z]) continue;
    bool least = true;
    for (std::size_t y = 0; y < m.size() && least; ++y) {
      if (!b[y]) continue;
      const Rational& g = upward ? m.grade(z, y).value() : m.grade(y, z).value();
      least = 2 * g > 1;
    }
    if (least) out.push_back(z);
  }
  return out;
}

namespace {

std::vector<ElementIndex> subset_of(std::span<const ElementIndex> pool, unsigned bits) {
  std::vector<ElementIndex> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (bits & (1u << i)) out.push_back(pool[i]);
  }
  return out;
}

}  // namespace

bool all_subsets_bounded(const MembershipMatrix& m) {
  std::vector<ElementIndex> all(m.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (unsigned bits = 1; bits < (1u << all.size()); ++bits) {
    const auto subset = subset_of(all, bits);
    if (extremum_candidates(m, subset, true).size() != 1) return false;
    if (extremum_candidates(m, subset, false).size() != 1) return false;
  }
  return true;
}

bool directed_by_subsets(const MembershipMatrix& m, std::span<const ElementIndex> subset, bool upward) {
  if (subset.empty()) return false;
  for (unsigned bits = 1; bits < (1u << subset.size()); ++bits) {
    const auto e = subset_of(subset, bits);
    const std::vector<bool> b = bounds(m, e, upward);
    if (std::none_of(subset.begin(), subset.end(), [&](ElementIndex d) { return b[d]; })) return false;
  }
  return true;
}

Mutation mutate(std::mt19937_64& rng, const MembershipMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::pair<ElementIndex, ElementIndex>> strict;
  std::vector<std::pair<ElementIndex, ElementIndex>> chained;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      if (x == z || m.grade(x, z).is_zero()) continue;
      strict.emplace_back(x, z);
      for (std::size_t y = 0; y < n; ++y) {
        if (y != x && y != z && !m.grade(x, y).is_zero() && !m.grade(y, z).is_zero()) {
          chained.emplace_back(x, z);
          break;
        }
      }
    }
  }
  std::vector<MutationKind> kinds{MutationKind::Reflexivity};
  if (!strict.empty()) kinds.push_back(MutationKind::Antisymmetry);
  if (!chained.empty()) kinds.push_back(MutationKind::Transitivity);
  const MutationKind kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];

  switch (kind) {
    case MutationKind::Reflexivity: {
      const ElementIndex x = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      const int k = std::uniform_int_distribution<int>(0, 11)(rng);
      return {m.with_grade(x, x, Grade(Rational(k, 12))), kind, x, x};
    }
    case MutationKind::Antisymmetry: {
      // Raise the reverse grade of a strict pair to 1.
      const auto [x, z] = strict[std::uniform_int_distribution<std::size_t>(0, strict.size() - 1)(rng)];
      return {m.with_grade(z, x, Grade::one()), kind, z, x};
    }
    case MutationKind::Transitivity: {
      const auto [x, z] = chained[std::uniform_int_distribution<std::size_t>(0, chained.size() - 1)(rng)];
      return {m.with_grade(x, z, Grade::zero()), kind, x, z};
    }
  }
  return {m, kind, 0, 0};
}

bool below(const SpaceSpec& s, const RationalVector& x, const RationalVector& y) {
  if (s.family() == Family::Lex) {
    if (x[0] != y[0]) return x[0] < y[0];
    return x[1] <= y[1];
  }
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

RationalVector max_of(const SpaceSpec& s, const RationalVector& x, const RationalVector& y) {
  if (s.family() == Family::Lex) return below(s, x, y) ? y : x;
  RationalVector out = x;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (y[i] > out[i]) out[i] = y[i];
  }
  return out;
}

RationalVector min_of(const SpaceSpec& s, const RationalVector& x, const RationalVector& y) {
  if (s.family() == Family::Lex) return below(s, x, y) ? x : y;
  RationalVector out = x;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (y[i] < out[i]) out[i] = y[i];
  }
  return out;
}

RationalVector magnitude(const SpaceSpec& s, const RationalVector& x) {
  if (s.family() == Family::Lex) return below(s, s.zero(), x) ? x : -x;
  RationalVector out = x;
  for (std::size_t i = 0; i < x.dimension(); ++i) out[i] = ::abs(x[i]);
  return out;
}

bool orthogonal(const SpaceSpec& s, const RationalVector& x, const RationalVector& y) {
  return min_of(s, magnitude(s, x), magnitude(s, y)).is_zero();
}

bool lambda_search(const SpaceSpec& s, std::span<const RationalVector> D, const RationalVector& x) {
  const RationalVector ax = magnitude(s, x);
  for (unsigned bits = 1; bits < (1u << D.size()); ++bits) {
    RationalVector g = s.zero();
    for (std::size_t i = 0; i < D.size(); ++i) {
      if (bits & (1u << i)) g += magnitude(s, D[i]);
    }
    std::vector<Rational> lambdas{Rational(0)};
    for (std::size_t j = 0; j < g.dimension(); ++j) {
      if (sgn(g[j]) == 0) continue;
      const Rational ratio(ax[j] / g[j]);
      lambdas.push_back(ratio);
      lambdas.push_back(Rational(ratio + 1));
    }
    for (const auto& lambda : lambdas) {
      if (below(s, ax, lambda * g)) return true;
    }
  }
  return false;
}

namespace {

struct Iteration {
  std::optional<RationalVector> stable;
  RationalVector last;
};

Iteration iterate_meets(const SpaceSpec& s, const RationalVector& g, const RationalVector& target, std::size_t cap) {
  RationalVector previous = min_of(s, target, g);
  for (std::size_t n = 2; n <= cap; ++n) {
    RationalVector next = min_of(s, target, Rational(static_cast<long>(n)) * g);
    if (next == previous) return {next, next};
    previous = std::move(next);
  }
  return {std::nullopt, previous};
}

}  // namespace

Stabilization stabilization(const SpaceSpec& s, std::span<const RationalVector> D, const RationalVector& x,
                            std::size_t cap) {
  RationalVector g = s.zero();
  for (const auto& d : D) g += magnitude(s, d);
  const RationalVector target = magnitude(s, x);
  const Iteration it = iterate_meets(s, g, target, cap);
  if (it.stable) return *it.stable == target ? Stabilization::Member : Stabilization::NonMember;
  // Lex: n g stays on the axis below an off-axis |x|. Its upper bounds are the
  // vectors with positive first coordinate, which have no least element, so
  // the supremum required for membership does not exist.
  if (s.family() == Family::Lex && sgn(g[0]) == 0 && sgn(target[0]) > 0) return Stabilization::NonMember;
  return Stabilization::Undecided;
}

std::optional<RationalVector> stabilized_supremum(const SpaceSpec& s, const RationalVector& x,
                                                  const RationalVector& y, std::size_t cap) {
  return iterate_meets(s, magnitude(s, x), magnitude(s, y), cap).stable;
}

RationalVector random_member(std::mt19937_64& rng, const SpaceSpec& s, const Handle& h) {
  RationalVector v = random_vector(rng, s.dimension());
  if (s.family() == Family::Lex) {
    if (h.kind() == LexKind::Zero) return s.zero();
    if (h.kind() == LexKind::Axis) v[0] = 0;
    return v;
  }
  const std::vector<bool> mask = h.mask();
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (!mask[i]) v[i] = 0;
  }
  return v;
}

std::vector<RationalVector> members(std::mt19937_64& rng, const SpaceSpec& s, const Handle& h, std::size_t extra) {
  std::vector<RationalVector> out;
  if (s.family() == Family::Lex) {
    if (h.kind() != LexKind::Zero) out.push_back(RationalVector::unit(2, 1));
    if (h.kind() == LexKind::Full) out.push_back(RationalVector::unit(2, 0));
  } else {
    const std::vector<bool> mask = h.mask();
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) out.push_back(RationalVector::unit(s.dimension(), i));
    }
  }
  for (std::size_t k = 0; k < extra; ++k) out.push_back(random_member(rng, s, h));
  return out;
}

bool orthogonal_to_all(const SpaceSpec& s, std::span<const RationalVector> probes, const RationalVector& x) {
  return std::all_of(probes.begin(), probes.end(), [&](const RationalVector& p) { return orthogonal(s, x, p); });
}

std::optional<RationalVector> dominated_member(const SpaceSpec& s, const Handle& h, const RationalVector& x) {
  std::vector<RationalVector> candidates;
  for (std::size_t j = 0; j < x.dimension(); ++j) {
    RationalVector piece = s.zero();
    piece[j] = x[j];
    candidates.push_back(std::move(piece));
  }
  if (s.family() == Family::Lex) candidates.push_back(RationalVector::unit(2, 1));
  candidates.push_back(x);
  const RationalVector ax = magnitude(s, x);
  for (const auto& y : candidates) {
    if (!y.is_zero() && ideal_contains(s, h, y) && below(s, magnitude(s, y), ax)) return y;
  }
  return std::nullopt;
}

namespace {

std::vector<RationalVector> spanning_units(const SpaceSpec& s, const Handle& h) {
  std::vector<RationalVector> out;
  if (s.family() == Family::Lex) {
    if (h.kind() == LexKind::Full) out.push_back(RationalVector::unit(2, 0));
    if (h.kind() != LexKind::Zero) out.push_back(RationalVector::unit(2, 1));
    return out;
  }
  const std::vector<bool> mask = h.mask();
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(RationalVector::unit(s.dimension(), i));
  }
  return out;
}

RationalVector combine(const SpaceSpec& s, std::span<const RationalVector> basis, std::span<const Rational> c) {
  RationalVector out = s.zero();
  for (std::size_t i = 0; i < basis.size(); ++i) out += c[i] * basis[i];
  return out;
}

}  // namespace

std::optional<std::pair<RationalVector, RationalVector>> split_by_solve(const SpaceSpec& s, const Handle& a,
                                                                        const Handle& b, const RationalVector& x) {
  const std::vector<RationalVector> ua = spanning_units(s, a);
  std::vector<RationalVector> ub;
  for (const auto& u : spanning_units(s, b)) {
    if (std::find(ua.begin(), ua.end(), u) == ua.end()) ub.push_back(u);
  }
  std::vector<RationalVector> basis = ua;
  basis.insert(basis.end(), ub.begin(), ub.end());
  const auto c = solve_in_span(basis, x);
  if (!c) return std::nullopt;
  const std::span<const Rational> coeffs(*c);
  RationalVector x1 = combine(s, ua, coeffs.first(ua.size()));
  RationalVector x2 = combine(s, ub, coeffs.subspan(ua.size()));
  return std::make_pair(std::move(x1), std::move(x2));
}

std::optional<RationalVector> interval_maximum(const SpaceSpec& s, const Handle& b, const RationalVector& x) {
  if (s.family() == Family::Lex) {
    switch (b.kind()) {
      case LexKind::Zero: return s.zero();
      case LexKind::Full: return x;
      case LexKind::Axis:
        // B ^ [0, x] = {(0, t) : t >= 0} is unbounded in t when x_1 > 0, and
        // its upper bounds (positive first coordinate) have no least element.
        if (sgn(x[0]) > 0) return std::nullopt;
        return x;
    }
  }
  RationalVector out = s.zero();
  const std::vector<bool> mask = b.mask();
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out[i] = x[i];
  }
  return out;
}

}  // namespace fuzzy::checks::oracle
