#include "fuzzy/foset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fuzzy/error.hpp"

namespace fuzzy {

MembershipMatrix::MembershipMatrix(std::vector<std::string> elements,
                                   std::span<const GradeEntry> entries, std::size_t carrier_cap)
    : elements_(std::move(elements)) {
  check_labels(carrier_cap);
  const std::size_t n = elements_.size();
  grades_.assign(n * n, Grade::zero());
  for (std::size_t i = 0; i < n; ++i) grades_[i * n + i] = Grade::one();
  for (const auto& e : entries) {
    grades_[index_of(e.from) * n + index_of(e.to)] = e.grade;
  }
}

MembershipMatrix MembershipMatrix::from_grades(std::vector<std::string> elements,
                                               std::vector<Grade> grades,
                                               std::size_t carrier_cap) {
  MembershipMatrix m;
  m.elements_ = std::move(elements);
  m.check_labels(carrier_cap);
  if (grades.size() != m.elements_.size() * m.elements_.size()) {
    fail(ErrorCode::InvalidCarrier, "grade table does not match carrier size");
  }
  m.grades_ = std::move(grades);
  return m;
}

void MembershipMatrix::check_labels(std::size_t carrier_cap) const {
  if (elements_.size() > carrier_cap) {
    fail(ErrorCode::CarrierTooLarge, "carrier has " + std::to_string(elements_.size()) +
                                         " elements, cap is " + std::to_string(carrier_cap));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : elements_) {
    if (label.empty()) fail(ErrorCode::InvalidCarrier, "empty element label");
    if (!seen.insert(label).second) {
      fail(ErrorCode::InvalidCarrier, "duplicate element label \"" + label + "\"");
    }
  }
}

ElementIndex MembershipMatrix::index_of(std::string_view label) const {
  const auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) {
    fail(ErrorCode::UnknownElement, "unknown element \"" + std::string(label) + "\"");
  }
  return static_cast<ElementIndex>(it - elements_.begin());
}

ElementSet MembershipMatrix::indices_of(std::span<const std::string> labels) const {
  ElementSet out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index_of(l));
  return out;
}

MembershipMatrix MembershipMatrix::with_grade(ElementIndex from, ElementIndex to, Grade g) const {
  MembershipMatrix copy = *this;
  copy.grades_.at(from * size() + to) = std::move(g);
  return copy;
}

ElementSet FuzzySubset::support() const {
  ElementSet out;
  for (std::size_t i = 0; i < membership_.size(); ++i) {
    if (!membership_[i].is_zero()) out.push_back(i);
  }
  return out;
}

AxiomReport validate_fuzzy_order(const MembershipMatrix& m) {
  AxiomReport report;
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (m.grade(x, x) != Grade::one()) report.reflexivity_violations.push_back(x);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      Rational sum = m.grade(x, y).value() + m.grade(y, x).value();
      if (sum > 1) report.antisymmetry_violations.push_back({x, y, std::move(sum)});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      const Grade* best = nullptr;
      std::size_t best_y = 0;
      for (std::size_t y = 0; y < n; ++y) {
        const Grade& link = std::min(m.grade(x, y), m.grade(y, z));
        if (best == nullptr || *best < link) {
          best = &link;
          best_y = y;
        }
      }
      if (best != nullptr && m.grade(x, z) < *best) {
        report.transitivity_violations.push_back({x, best_y, z, *best, m.grade(x, z)});
      }
    }
  }
  return report;
}

namespace {

void require_nonempty(std::span<const ElementIndex> subset, const MembershipMatrix& m) {
  if (subset.empty()) fail(ErrorCode::EmptyQuery, "bound query on an empty subset");
  for (auto i : subset) {
    if (i >= m.size()) fail(ErrorCode::UnknownElement, "element index out of range");
  }
}

// `upward` selects U(A) (grades mu(a, y)); otherwise L(A) (grades mu(y, a)).
FuzzySubset bound_set(const MembershipMatrix& m, std::span<const ElementIndex> subset, bool upward) {
  require_nonempty(subset, m);
  std::vector<Grade> membership;
  membership.reserve(m.size());
  for (std::size_t y = 0; y < m.size(); ++y) {
    Grade acc = Grade::one();
    bool cut = false;
    for (auto a : subset) {
      const Grade& g = upward ? m.grade(a, y) : m.grade(y, a);
      if (!g.holds()) {
        cut = true;
        break;
      }
      acc = std::min(acc, g);
    }
    membership.push_back(cut ? Grade::zero() : acc);
  }
  return FuzzySubset(std::move(membership));
}

std::optional<ElementIndex> extremum(const MembershipMatrix& m, std::span<const ElementIndex> subset,
                                     bool upward) {
  const FuzzySubset bounds = bound_set(m, subset, upward);
  const ElementSet candidates = bounds.support();
  std::optional<ElementIndex> found;
  for (auto z : candidates) {
    const bool least = std::all_of(candidates.begin(), candidates.end(), [&](ElementIndex y) {
      return upward ? m.precedes(z, y) : m.precedes(y, z);
    });
    if (!least) continue;
    if (found) {
      fail(ErrorCode::BrokenOrder, "two " + std::string(upward ? "suprema" : "infima") +
                                       " found (\"" + m.label(*found) + "\", \"" + m.label(z) +
                                       "\"): the matrix is not a fuzzy order");
    }
    found = z;
  }
  return found;
}

}  // namespace

FuzzySubset upper_bound_set(const MembershipMatrix& m, std::span<const ElementIndex> subset) {
  return bound_set(m, subset, true);
}

FuzzySubset lower_bound_set(const MembershipMatrix& m, std::span<const ElementIndex> subset) {
  return bound_set(m, subset, false);
}

std::optional<ElementIndex> supremum(const MembershipMatrix& m, std::span<const ElementIndex> subset) {
  return extremum(m, subset, true);
}

std::optional<ElementIndex> infimum(const MembershipMatrix& m, std::span<const ElementIndex> subset) {
  return extremum(m, subset, false);
}

std::optional<ElementIndex> join(const MembershipMatrix& m, ElementIndex x, ElementIndex y) {
  const ElementIndex pair[] = {x, y};
  return supremum(m, pair);
}

std::optional<ElementIndex> meet(const MembershipMatrix& m, ElementIndex x, ElementIndex y) {
  const ElementIndex pair[] = {x, y};
  return infimum(m, pair);
}

bool is_lattice(const MembershipMatrix& m) {
  if (!validate_fuzzy_order(m).is_fuzzy_order()) {
    fail(ErrorCode::InvalidOrder, "lattice query on a matrix that is not a fuzzy order");
  }
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x + 1; y < m.size(); ++y) {
      if (!join(m, x, y) || !meet(m, x, y)) return false;
    }
  }
  return true;
}

bool is_directed(const MembershipMatrix& m, std::span<const ElementIndex> subset, Direction direction) {
  if (subset.empty()) return false;
  const auto one_way = [&](bool upward) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = i + 1; j < subset.size(); ++j) {
        const ElementIndex pair[] = {subset[i], subset[j]};
        const FuzzySubset bounds = bound_set(m, pair, upward);
        const bool hit = std::any_of(subset.begin(), subset.end(),
                                     [&](ElementIndex d) { return bounds.contains(d); });
        if (!hit) return false;
      }
    }
    return true;
  };
  switch (direction) {
    case Direction::Right: return one_way(true);
    case Direction::Left: return one_way(false);
    case Direction::Both: return one_way(true) && one_way(false);
  }
  return false;
}

MembershipMatrix max_min_closure(const MembershipMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Grade> g;
  g.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) g.push_back(m.grade(x, y));
  // Floyd-Warshall over the (max, min) semiring.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x == k) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == k) continue;
        const Grade& via = std::min(g[x * n + k], g[k * n + z]);
        if (g[x * n + z] < via) g[x * n + z] = via;
      }
    }
  }
  return MembershipMatrix::from_grades(m.elements(), std::move(g), std::max(n, kDefaultCarrierCap));
}

MembershipMatrix random_foset(std::mt19937_64& rng, const FosetGeneratorOptions& options) {
  if (options.min_size == 0 || options.min_size > options.max_size) {
    fail(ErrorCode::SpecError, "invalid foset generator size range");
  }
  if (options.strict_grade <= one_half() || options.strict_grade > 1) {
    fail(ErrorCode::InvalidGrade, "strict grade must lie in (1/2, 1]");
  }
  std::uniform_int_distribution<std::size_t> size_dist(options.min_size, options.max_size);
  const std::size_t n = size_dist(rng);

  std::vector<std::size_t> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::shuffle(topo.begin(), topo.end(), rng);

  std::bernoulli_distribution edge(options.edge_probability);
  std::uniform_int_distribution<int> grade_step(7, 12);  // k/12 in (1/2, 1]
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));

  std::vector<Grade> g(n * n, Grade::zero());
  for (std::size_t i = 0; i < n; ++i) g[i * n + i] = Grade::one();
  const Grade constant(options.strict_grade);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!edge(rng)) continue;
      const std::size_t from = topo[a];
      const std::size_t to = topo[b];
      g[from * n + to] = options.graded_edges ? Grade(Rational(grade_step(rng), 12)) : constant;
    }
  }
  MembershipMatrix closed = max_min_closure(MembershipMatrix::from_grades(labels, std::move(g)));
  if (options.graded_edges) return closed;

  // Crisp closure lifted to the constant grade.
  std::vector<Grade> flat;
  flat.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) flat.push_back(Grade::one());
      else flat.push_back(closed.grade(x, y).is_zero() ? Grade::zero() : constant);
    }
  }
  return MembershipMatrix::from_grades(std::move(labels), std::move(flat));
}

}  // namespace fuzzy
