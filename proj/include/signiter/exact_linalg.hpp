#pragma once

#include <cstddef>
#include <vector>

#include "signiter/rational.hpp"

namespace signiter {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector operator*(const RationalVector& x) const;

  void swap_rows(std::size_t i, std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelonForm {
  RationalMatrix reduced;
  /// Pivot column of each nonzero row, ascending.
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first row (top to bottom) with a nonzero entry, so the
/// result is reproducible.
RowEchelonForm reduced_row_echelon(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column in ascending order,
/// with that free variable set to 1 and the other free variables to 0.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

/// Solves the square system a x = rhs; throws SingularSystemError if a is
/// singular.
RationalVector solve(const RationalMatrix& a, const RationalVector& rhs);

}  // namespace signiter
