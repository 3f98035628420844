#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzy/rational.hpp"
#include "fuzzy/riesz.hpp"

namespace fuzzy {

/// Exact rational matrix acting on coordinate vectors by multiplication.
/// Endomorphisms (square) are the common case: T, band projections, identity.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws DimensionError on a size mismatch.
  OperatorMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  OperatorMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static OperatorMatrix identity(std::size_t n);
  static OperatorMatrix zero(std::size_t n) { return OperatorMatrix(n, n); }
  /// Diagonal 0/1 matrix keeping the coordinates where `mask[i]` is set.
  static OperatorMatrix diagonal_mask(const std::vector<bool>& mask);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  RationalVector apply(const RationalVector& x) const;
  RationalVector column(std::size_t c) const;
  bool is_idempotent() const;

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(const Rational& s, OperatorMatrix m);
  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// "[[1, 0], [0, 1]]".
std::string format_matrix(const OperatorMatrix& m);

/// Rank of the vectors by exact Gaussian elimination.
std::size_t rank(std::span<const RationalVector> vectors);

/// Coefficients c with sum c_i * basis_i == x, or nullopt when x is outside
/// the span. `basis` must be linearly independent.
std::optional<std::vector<Rational>> solve_in_span(std::span<const RationalVector> basis,
                                                   const RationalVector& x);

}  // namespace fuzzy
