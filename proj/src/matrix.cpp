#include "fuzzy/matrix.hpp"

#include "fuzzy/error.hpp"

namespace fuzzy {

OperatorMatrix::OperatorMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

OperatorMatrix::OperatorMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    fail(ErrorCode::DimensionError, "matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                                        std::to_string(entries_.size()));
  }
}

OperatorMatrix::OperatorMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& row : rows) {
    if (row.size() != cols_) fail(ErrorCode::DimensionError, "ragged matrix rows");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

OperatorMatrix OperatorMatrix::identity(std::size_t n) {
  OperatorMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

OperatorMatrix OperatorMatrix::diagonal_mask(const std::vector<bool>& mask) {
  OperatorMatrix m(mask.size(), mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) m(i, i) = 1;
  }
  return m;
}

RationalVector OperatorMatrix::apply(const RationalVector& x) const {
  if (x.dimension() != cols_) {
    fail(ErrorCode::DimensionError, "operator with " + std::to_string(cols_) +
                                        " columns applied to a vector of dimension " +
                                        std::to_string(x.dimension()));
  }
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * x[c];
    }
  }
  return out;
}

RationalVector OperatorMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool OperatorMatrix::is_idempotent() const { return is_square() && (*this) * (*this) == *this; }

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionError, "matrix product dimension mismatch");
  OperatorMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionError, "matrix sum dimension mismatch");
  OperatorMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    fail(ErrorCode::DimensionError, "matrix difference dimension mismatch");
  }
  OperatorMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

OperatorMatrix operator*(const Rational& s, OperatorMatrix m) {
  for (auto& e : m.entries_) e *= s;
  return m;
}

std::string format_matrix(const OperatorMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += format_rational(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

namespace {

// Row-reduces `rows` in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t width = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& e : rows[r]) e *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < width; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(std::span<const RationalVector> vectors) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vectors) rows.emplace_back(v.coordinates().begin(), v.coordinates().end());
  return row_reduce(rows).size();
}

std::optional<std::vector<Rational>> solve_in_span(std::span<const RationalVector> basis,
                                                   const RationalVector& x) {
  // Augmented system: columns are basis vectors, right-hand side x.
  const std::size_t k = basis.size();
  std::vector<std::vector<Rational>> rows(x.dimension(), std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (basis[j].dimension() != x.dimension()) fail(ErrorCode::DimensionError, "basis dimension mismatch");
      rows[i][j] = basis[j][i];
    }
    rows[i][k] = x[i];
  }
  const auto pivots = row_reduce(rows);
  std::vector<Rational> coeffs(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == k) return std::nullopt;  // inconsistent row 0 = nonzero
    coeffs[pivots[r]] = rows[r][k];
  }
  return coeffs;
}

}  // namespace fuzzy
