#include "fuzzy/convergence.hpp"

#include <variant>

#include "fuzzy/error.hpp"

namespace fuzzy {

namespace {

Rational power(const Rational& r, std::size_t n) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), n);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

DominatingFamily DominatingFamily::geometric(RationalVector base, Rational ratio) {
  DominatingFamily f;
  f.terms_.push_back({Kind::Geometric, std::move(base), std::move(ratio), Rational(1)});
  return f;
}

DominatingFamily DominatingFamily::harmonic(RationalVector base) {
  DominatingFamily f;
  f.terms_.push_back({Kind::Harmonic, std::move(base), Rational(0), Rational(1)});
  return f;
}

std::size_t DominatingFamily::dimension() const {
  return terms_.empty() ? 0 : terms_.front().base.dimension();
}

bool DominatingFamily::identically_zero() const {
  for (const auto& t : terms_) {
    if (!t.base.is_zero()) return false;
  }
  return true;
}

RationalVector DominatingFamily::at(std::size_t n) const {
  if (n == 0) fail(ErrorCode::SpecError, "dominating families are indexed from 1");
  RationalVector out(dimension());
  for (const auto& t : terms_) {
    const Rational factor = t.kind == Kind::Geometric ? Rational(t.coefficient * power(t.ratio, n))
                                                      : Rational(t.coefficient / Rational(n));
    out += factor * t.base;
  }
  return out;
}

DominatingFamily DominatingFamily::scaled(const Rational& c) const {
  DominatingFamily out;
  if (sgn(c) == 0) return out;
  const Rational magnitude = sgn(c) < 0 ? Rational(-c) : c;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coefficient *= magnitude;
  return out;
}

DominatingFamily operator+(const DominatingFamily& a, const DominatingFamily& b) {
  if (!a.terms_.empty() && !b.terms_.empty() && a.dimension() != b.dimension()) {
    fail(ErrorCode::DimensionError, "dominating families of different dimensions");
  }
  DominatingFamily out = a;
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

std::string DominatingFamily::describe() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) out += " + ";
    if (t.coefficient != 1) out += format_rational(t.coefficient) + "*";
    out += format_vector(t.base);
    out += t.kind == Kind::Geometric ? "*(" + format_rational(t.ratio) + ")^n" : "/n";
  }
  return out;
}

void validate_family(const SpaceSpec& s, const DominatingFamily& family) {
  for (const auto& t : family.terms()) {
    if (t.base.dimension() != s.dimension()) {
      fail(ErrorCode::SpecError, "dominating base " + format_vector(t.base) + " has the wrong dimension");
    }
    if (t.base.is_zero() || !is_positive(s, t.base)) {
      fail(ErrorCode::SpecError, "dominating base " + format_vector(t.base) + " is not a nonzero positive vector");
    }
    if (s.family() == Family::Lex && sgn(t.base[0]) != 0) {
      fail(ErrorCode::SpecError, "lex dominating base " + format_vector(t.base) +
                                     " lies off the axis; its multiples have no infimum");
    }
    if (t.kind == DominatingFamily::Kind::Geometric && (sgn(t.ratio) <= 0 || t.ratio >= 1)) {
      fail(ErrorCode::SpecError, "geometric ratio " + format_rational(t.ratio) + " outside (0, 1)");
    }
    if (sgn(t.coefficient) <= 0) fail(ErrorCode::SpecError, "non-positive family coefficient");
  }
}

struct SequenceSpec::Node {
  struct Prefix {
    std::vector<RationalVector> terms;
    std::optional<RationalVector> tail;
  };
  struct Closed {
    RationalVector base;
    RationalVector direction;
    CoefficientKind kind;
    Rational ratio;
  };
  struct Combination {
    Rational a;
    SequenceSpec first;
    Rational b;
    SequenceSpec second;
  };
  struct Unary {
    UnaryOp op;
    SequenceSpec inner;
  };
  struct Binary {
    BinaryOp op;
    SequenceSpec first;
    SequenceSpec second;
  };
  std::variant<Prefix, Closed, Combination, Unary, Binary> value;
};

SequenceSpec SequenceSpec::prefix(std::vector<RationalVector> terms, std::optional<RationalVector> constant_tail) {
  if (terms.empty() && !constant_tail) fail(ErrorCode::SpecError, "sequence prefix is empty and has no tail");
  return SequenceSpec(std::make_shared<const Node>(Node{Node::Prefix{std::move(terms), std::move(constant_tail)}}));
}

SequenceSpec SequenceSpec::closed_form(RationalVector base, RationalVector direction, CoefficientKind kind,
                                       Rational ratio) {
  if (base.dimension() != direction.dimension()) {
    fail(ErrorCode::SpecError, "closed-form base and direction differ in dimension");
  }
  return SequenceSpec(
      std::make_shared<const Node>(Node{Node::Closed{std::move(base), std::move(direction), kind, std::move(ratio)}}));
}

SequenceSpec SequenceSpec::combination(Rational a, SequenceSpec first, Rational b, SequenceSpec second) {
  return SequenceSpec(std::make_shared<const Node>(
      Node{Node::Combination{std::move(a), std::move(first), std::move(b), std::move(second)}}));
}

SequenceSpec SequenceSpec::unary(UnaryOp op, SequenceSpec inner) {
  return SequenceSpec(std::make_shared<const Node>(Node{Node::Unary{op, std::move(inner)}}));
}

SequenceSpec SequenceSpec::binary(BinaryOp op, SequenceSpec first, SequenceSpec second) {
  return SequenceSpec(std::make_shared<const Node>(Node{Node::Binary{op, std::move(first), std::move(second)}}));
}

RationalVector SequenceSpec::at(const SpaceSpec& s, std::size_t n) const {
  if (n == 0) fail(ErrorCode::SpecError, "sequences are indexed from 1");
  const Node& node = *node_;
  if (const auto* p = std::get_if<Node::Prefix>(&node.value)) {
    if (n <= p->terms.size()) {
      check_dimension(s, p->terms[n - 1]);
      return p->terms[n - 1];
    }
    if (!p->tail) {
      fail(ErrorCode::SpecError, "index " + std::to_string(n) + " past the end of a " +
                                     std::to_string(p->terms.size()) + "-term prefix without tail");
    }
    check_dimension(s, *p->tail);
    return *p->tail;
  }
  if (const auto* c = std::get_if<Node::Closed>(&node.value)) {
    check_dimension(s, c->base);
    Rational k;
    switch (c->kind) {
      case CoefficientKind::Geometric: k = power(c->ratio, n); break;
      case CoefficientKind::Harmonic: k = Rational(1, n); break;
      case CoefficientKind::AlternatingHarmonic: k = Rational(n % 2 == 0 ? 1 : -1, n); break;
      case CoefficientKind::Alternating: k = n % 2 == 0 ? -1 : 1; break;
      case CoefficientKind::Constant: k = 1; break;
    }
    k.canonicalize();
    return c->base + k * c->direction;
  }
  if (const auto* c = std::get_if<Node::Combination>(&node.value)) {
    return c->a * c->first.at(s, n) + c->b * c->second.at(s, n);
  }
  if (const auto* u = std::get_if<Node::Unary>(&node.value)) {
    const RationalVector x = u->inner.at(s, n);
    switch (u->op) {
      case UnaryOp::PositivePart: return pos_part(s, x);
      case UnaryOp::NegativePart: return neg_part(s, x);
      case UnaryOp::Absolute: return abs(s, x);
    }
  }
  const auto& b = std::get<Node::Binary>(node.value);
  const RationalVector x = b.first.at(s, n);
  const RationalVector y = b.second.at(s, n);
  return b.op == BinaryOp::Join ? join(s, x, y) : meet(s, x, y);
}

std::optional<RationalVector> SequenceSpec::constant_tail() const {
  if (const auto* p = std::get_if<Node::Prefix>(&node_->value)) return p->tail;
  return std::nullopt;
}

std::string SequenceSpec::describe() const {
  const Node& node = *node_;
  if (const auto* p = std::get_if<Node::Prefix>(&node.value)) {
    std::string out = "[";
    for (std::size_t i = 0; i < p->terms.size(); ++i) {
      if (i) out += ", ";
      out += format_vector(p->terms[i]);
    }
    out += "]";
    if (p->tail) out += " then " + format_vector(*p->tail);
    return out;
  }
  if (const auto* c = std::get_if<Node::Closed>(&node.value)) {
    std::string coeff;
    switch (c->kind) {
      case CoefficientKind::Geometric: coeff = "(" + format_rational(c->ratio) + ")^n"; break;
      case CoefficientKind::Harmonic: coeff = "1/n"; break;
      case CoefficientKind::AlternatingHarmonic: coeff = "(-1)^n/n"; break;
      case CoefficientKind::Alternating: coeff = "(-1)^(n+1)"; break;
      case CoefficientKind::Constant: coeff = "1"; break;
    }
    return format_vector(c->base) + " + " + coeff + "*" + format_vector(c->direction);
  }
  if (const auto* c = std::get_if<Node::Combination>(&node.value)) {
    return format_rational(c->a) + "*(" + c->first.describe() + ") + " + format_rational(c->b) + "*(" +
           c->second.describe() + ")";
  }
  if (const auto* u = std::get_if<Node::Unary>(&node.value)) {
    const char* name = u->op == UnaryOp::PositivePart ? "pos" : (u->op == UnaryOp::NegativePart ? "neg" : "abs");
    return std::string(name) + "(" + u->inner.describe() + ")";
  }
  const auto& b = std::get<Node::Binary>(node.value);
  return std::string(b.op == BinaryOp::Join ? "join" : "meet") + "(" + b.first.describe() + ", " +
         b.second.describe() + ")";
}

std::string_view to_string(InfZeroStatus s) noexcept {
  return s == InfZeroStatus::Analytic ? "analytic" : "not_applicable";
}

CertificateReport check_convergence_certificate(const SpaceSpec& s, const SequenceSpec& seq,
                                                const RationalVector& limit, const DominatingFamily& family,
                                                std::size_t horizon) {
  if (horizon == 0) fail(ErrorCode::SpecError, "horizon must be at least 1");
  check_dimension(s, limit);
  validate_family(s, family);
  CertificateReport report;
  report.verified_horizon = horizon;
  report.inf_zero_status = family.identically_zero() ? InfZeroStatus::NotApplicable : InfZeroStatus::Analytic;
  RationalVector previous;
  for (std::size_t n = 1; n <= horizon; ++n) {
    const RationalVector y = family.at(n);
    const Grade g = mu(s, abs(s, seq.at(s, n) - limit), y);
    if (!g.holds()) report.violations.push_back({n, g});
    if (n > 1 && report.monotone_ok && !precedes(s, y, previous)) {
      report.monotone_ok = false;
      report.monotone_failure = n - 1;
    }
    previous = y;
  }
  return report;
}

namespace {

// Geometric family with ratio 1/2 dominating the finitely many nonzero
// differences of a constant-tail sequence; nullopt in the lex plane when a
// difference lies off the axis.
std::optional<DominatingFamily> prefix_certificate(const SpaceSpec& s, const SequenceSpec& seq,
                                                   const RationalVector& limit, std::size_t prefix_length) {
  RationalVector base = s.zero();
  Rational scale = 1;
  for (std::size_t n = 1; n <= prefix_length; ++n) {
    scale *= 2;
    const RationalVector d = abs(s, seq.at(s, n) - limit);
    if (s.family() == Family::Lex && sgn(d[0]) != 0) return std::nullopt;
    base = join(s, base, scale * d);
  }
  if (base.is_zero()) {
    base = s.zero();
    base[s.dimension() - 1] = 1;
    if (s.family() == Family::Pointwise) {
      for (std::size_t i = 0; i < base.dimension(); ++i) base[i] = 1;
    }
  }
  return DominatingFamily::geometric(std::move(base), Rational(1, 2));
}

}  // namespace

MonotoneLimitReport check_monotone_limit(const SpaceSpec& s, const SequenceSpec& seq, const RationalVector& limit,
                                         std::size_t horizon, const std::optional<DominatingFamily>& family) {
  if (horizon == 0) fail(ErrorCode::SpecError, "horizon must be at least 1");
  check_dimension(s, limit);
  MonotoneLimitReport report;
  report.horizon = horizon;
  RationalVector previous;
  for (std::size_t n = 1; n <= horizon; ++n) {
    const RationalVector x = seq.at(s, n);
    if (n > 1 && !precedes(s, previous, x)) {
      fail(ErrorCode::NotMonotone, "sequence is not increasing at index " + std::to_string(n) + ": " +
                                       format_vector(previous) + " then " + format_vector(x));
    }
    if (report.bounded_by_limit && !precedes(s, x, limit)) {
      report.bounded_by_limit = false;
      report.bound_failure = n;
    }
    previous = x;
  }
  if (const auto tail = seq.constant_tail()) {
    report.tail_matches = *tail == limit;
  }
  if (family) {
    report.certificate = check_convergence_certificate(s, seq, limit, *family, horizon);
  } else if (seq.constant_tail()) {
    std::size_t prefix_length = 0;
    while (prefix_length < horizon && !(seq.at(s, prefix_length + 1) == *seq.constant_tail())) ++prefix_length;
    if (const auto built = prefix_certificate(s, seq, limit, prefix_length)) {
      report.certificate = check_convergence_certificate(s, seq, limit, *built, horizon);
      report.note = "geometric certificate " + built->describe();
    } else {
      report.note = "no geometric certificate: a prefix term differs from the limit off the axis";
    }
  }
  return report;
}

ClosednessVerdict check_order_closed_under(const SpaceSpec& s, const Handle& h, const SequenceSpec& seq,
                                           const RationalVector& limit, const DominatingFamily& family,
                                           std::size_t horizon) {
  check_handle(s, h);
  ClosednessVerdict verdict;
  verdict.certificate = check_convergence_certificate(s, seq, limit, family, horizon);
  if (!verdict.certificate.accepted()) {
    fail(ErrorCode::CertificateRejected, "certificate for " + seq.describe() + " -> " + format_vector(limit) +
                                             " fails on the horizon");
  }
  for (std::size_t n = 1; n <= horizon; ++n) {
    if (!ideal_contains(s, h, seq.at(s, n))) {
      fail(ErrorCode::SpecError, "term " + std::to_string(n) + " lies outside " + format_handle(h));
    }
  }
  verdict.limit_in_handle = ideal_contains(s, h, limit);
  return verdict;
}

bool LimitLawReport::all_accepted() const {
  for (const auto& c : checks) {
    if (!c.report.accepted()) return false;
  }
  return true;
}

LimitLawReport check_limit_laws(const SpaceSpec& s, const CertifiedSequence& first, const CertifiedSequence& second,
                                const Rational& a, const Rational& b, std::size_t horizon) {
  for (const auto* c : {&first, &second}) {
    if (!check_convergence_certificate(s, c->sequence, c->limit, c->family, horizon).accepted()) {
      fail(ErrorCode::CertificateRejected, "input certificate for " + c->sequence.describe() + " is rejected");
    }
  }
  const auto& x = first;
  const auto& y = second;
  std::vector<std::pair<std::string, CertifiedSequence>> laws;
  laws.push_back({"linear combination",
                  {SequenceSpec::combination(a, x.sequence, b, y.sequence), a * x.limit + b * y.limit,
                   x.family.scaled(a) + y.family.scaled(b)}});
  laws.push_back({"positive part",
                  {SequenceSpec::unary(UnaryOp::PositivePart, x.sequence), pos_part(s, x.limit), x.family}});
  laws.push_back({"negative part",
                  {SequenceSpec::unary(UnaryOp::NegativePart, x.sequence), neg_part(s, x.limit), x.family}});
  laws.push_back({"absolute value", {SequenceSpec::unary(UnaryOp::Absolute, x.sequence), abs(s, x.limit), x.family}});
  laws.push_back({"join",
                  {SequenceSpec::binary(BinaryOp::Join, x.sequence, y.sequence), join(s, x.limit, y.limit),
                   x.family + y.family}});
  laws.push_back({"meet",
                  {SequenceSpec::binary(BinaryOp::Meet, x.sequence, y.sequence), meet(s, x.limit, y.limit),
                   x.family + y.family}});
  LimitLawReport report;
  for (auto& [name, derived] : laws) {
    CertificateReport r = check_convergence_certificate(s, derived.sequence, derived.limit, derived.family, horizon);
    report.checks.push_back({name, std::move(derived), std::move(r)});
  }
  return report;
}

}  // namespace fuzzy
