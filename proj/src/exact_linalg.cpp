#include "signiter/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

#include "signiter/errors.hpp"

namespace signiter {

RationalVector RationalMatrix::operator*(const RationalVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) y[r] += (*this)(r, c) * x[c];
    }
  }
  return y;
}

void RationalMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

RowEchelonForm reduced_row_echelon(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);

    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
  const RowEchelonForm rref = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rref.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < rref.rank(); ++r) v[rref.pivot_cols[r]] = -rref.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector solve(const RationalMatrix& a, const RationalVector& rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  if (n == 0) return {};

  RationalMatrix augmented(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n) = rhs[r];
  }
  const RowEchelonForm rref = reduced_row_echelon(std::move(augmented));
  if (rref.rank() < n || rref.pivot_cols.back() != n - 1) {
    throw SingularSystemError("exact linear system is singular");
  }
  RationalVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = rref.reduced(r, n);
  return x;
}

}  // namespace signiter
