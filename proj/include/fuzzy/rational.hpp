#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace fuzzy {

/// Exact rational number. mpq_class(p, q) does not reduce, so runtime values
/// go through parse_rational, Grade or an explicit canonicalize().
using Rational = mpq_class;

/// Parses "p", "p/q" or a finite decimal such as "-1.25". Throws
/// Error{ParseError} on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

inline const Rational& one_half() {
  static const Rational half(1, 2);
  return half;
}

/// A membership grade: an exact rational in [0, 1].
///
/// Every predicate of the theory reads a grade through the strict threshold
/// `holds()` (grade > 1/2), so the comparison must be exact.
class Grade {
 public:
  Grade() = default;
  explicit Grade(Rational value);

  static Grade zero() { return Grade(); }
  static Grade one() { return Grade(Rational(1)); }

  const Rational& value() const noexcept { return value_; }

  /// True iff the grade exceeds 1/2, i.e. the relation "x precedes y" holds.
  bool holds() const { return value_ > one_half(); }
  bool is_zero() const { return sgn(value_) == 0; }

  friend bool operator==(const Grade& a, const Grade& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational value_{0};
};

Grade parse_grade(std::string_view text);

inline std::string format_grade(const Grade& g) { return format_rational(g.value()); }

inline std::ostream& operator<<(std::ostream& os, const Grade& g) {
  return os << format_grade(g);
}

}  // namespace fuzzy
