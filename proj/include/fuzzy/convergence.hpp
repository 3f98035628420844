#pragma once

// Fuzzy order convergence of sequences, certified by dominating families.
//
// A certificate for x_n -> x is a family y_n with mu(|x_n - x|, y_n) > 1/2
// and y_n decreasing to 0. The first two conditions are checked exactly up to
// a horizon. The infimum-zero part is analytic: only families whose infimum is
// known to be 0 (geometric and harmonic multiples of a positive base, the base
// on the axis in the lex plane) can be built, so the claim never needs checking.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fuzzy/ideals.hpp"
#include "fuzzy/riesz.hpp"

namespace fuzzy {

inline constexpr std::size_t kDefaultHorizon = 128;

class DominatingFamily {
 public:
  enum class Kind { Geometric, Harmonic };
  struct Term {
    Kind kind;
    RationalVector base;
    Rational ratio;        // geometric only
    Rational coefficient;  // > 0
  };

  /// base * ratio^n.
  static DominatingFamily geometric(RationalVector base, Rational ratio);
  /// base / n.
  static DominatingFamily harmonic(RationalVector base);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t dimension() const;
  bool identically_zero() const;

  /// y_n for n >= 1.
  RationalVector at(std::size_t n) const;

  /// |c| * family; a zero factor yields the identically zero family.
  DominatingFamily scaled(const Rational& c) const;
  friend DominatingFamily operator+(const DominatingFamily& a, const DominatingFamily& b);

  std::string describe() const;

 private:
  std::vector<Term> terms_;
};

/// Throws SpecError when a term's base is not positive in `s` (or, in the lex
/// family, lies off the axis), when a ratio is outside (0, 1), or on a
/// dimension mismatch.
void validate_family(const SpaceSpec& s, const DominatingFamily& family);

enum class CoefficientKind {
  Geometric,            // ratio^n
  Harmonic,             // 1/n
  AlternatingHarmonic,  // (-1)^n / n
  Alternating,          // (-1)^(n+1)
  Constant,             // 1
};

enum class UnaryOp { PositivePart, NegativePart, Absolute };
enum class BinaryOp { Join, Meet };

class SequenceSpec {
 public:
  /// Explicit terms x_1..x_k, optionally continued by a constant tail.
  static SequenceSpec prefix(std::vector<RationalVector> terms, std::optional<RationalVector> constant_tail = {});
  /// x_n = base + coefficient(n) * direction.
  static SequenceSpec closed_form(RationalVector base, RationalVector direction, CoefficientKind kind,
                                  Rational ratio = Rational(1, 2));
  /// a * first_n + b * second_n.
  static SequenceSpec combination(Rational a, SequenceSpec first, Rational b, SequenceSpec second);
  static SequenceSpec unary(UnaryOp op, SequenceSpec inner);
  static SequenceSpec binary(BinaryOp op, SequenceSpec first, SequenceSpec second);

  /// Throws SpecError for n = 0 or past the end of a prefix without a tail.
  RationalVector at(const SpaceSpec& s, std::size_t n) const;

  /// Tail value when the sequence is a prefix with a constant tail.
  std::optional<RationalVector> constant_tail() const;

  std::string describe() const;

  struct Node;

 private:
  explicit SequenceSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class InfZeroStatus { Analytic, NotApplicable };

std::string_view to_string(InfZeroStatus s) noexcept;

struct Violation {
  std::size_t n;
  Grade grade;  // mu(|x_n - x|, y_n)
};

struct CertificateReport {
  std::size_t verified_horizon = 0;
  std::vector<Violation> violations;
  bool monotone_ok = true;
  /// First n with mu(y_(n+1), y_n) <= 1/2.
  std::optional<std::size_t> monotone_failure;
  InfZeroStatus inf_zero_status = InfZeroStatus::Analytic;

  bool accepted() const noexcept { return violations.empty() && monotone_ok; }
};

/// Throws SpecError for horizon 0, an invalid family or an unevaluable index.
CertificateReport check_convergence_certificate(const SpaceSpec& s, const SequenceSpec& seq,
                                                const RationalVector& limit, const DominatingFamily& family,
                                                std::size_t horizon = kDefaultHorizon);

struct MonotoneLimitReport {
  std::size_t horizon = 0;
  /// mu(x_n, limit) > 1/2 for every n up to the horizon.
  bool bounded_by_limit = true;
  std::optional<std::size_t> bound_failure;
  /// For constant tails: the limit equals the tail value.
  std::optional<bool> tail_matches;
  /// Geometric certificate built from the prefix of a constant-tail sequence,
  /// or the certificate for `family` when one is supplied.
  std::optional<CertificateReport> certificate;
  std::string note;

  bool accepted() const noexcept {
    return bounded_by_limit && tail_matches.value_or(true) && (!certificate || certificate->accepted());
  }
};

/// Increasing sequence with the given limit. Throws NotMonotone naming the
/// first index n with mu(x_(n-1), x_n) <= 1/2.
MonotoneLimitReport check_monotone_limit(const SpaceSpec& s, const SequenceSpec& seq, const RationalVector& limit,
                                         std::size_t horizon = kDefaultHorizon,
                                         const std::optional<DominatingFamily>& family = std::nullopt);

struct ClosednessVerdict {
  bool limit_in_handle = false;
  CertificateReport certificate;
};

/// Whether the limit of a certified sequence inside h stays in h. Throws
/// CertificateRejected when the certificate fails and SpecError when some
/// x_n up to the horizon lies outside h.
ClosednessVerdict check_order_closed_under(const SpaceSpec& s, const Handle& h, const SequenceSpec& seq,
                                           const RationalVector& limit, const DominatingFamily& family,
                                           std::size_t horizon = kDefaultHorizon);

struct CertifiedSequence {
  SequenceSpec sequence;
  RationalVector limit;
  DominatingFamily family;
};

struct LawCheck {
  std::string law;
  CertifiedSequence derived;
  CertificateReport report;
};

struct LimitLawReport {
  std::vector<LawCheck> checks;
  bool all_accepted() const;
};

/// Builds and re-verifies certificates for a x_n + b y_n, x_n+, x_n-, |x_n|,
/// x_n v y_n and x_n ^ y_n. Throws CertificateRejected when either input
/// certificate fails on the horizon.
LimitLawReport check_limit_laws(const SpaceSpec& s, const CertifiedSequence& first, const CertifiedSequence& second,
                                const Rational& a, const Rational& b, std::size_t horizon = kDefaultHorizon);

}  // namespace fuzzy
