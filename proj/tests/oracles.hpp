#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the elimination, recursion or series code under test.

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "signiter/exact_linalg.hpp"
#include "signiter/poly.hpp"
#include "signiter/rational.hpp"

namespace oracle {

using signiter::Poly;
using signiter::Rational;

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Taylor coefficients of (1 - xi)^(-1/2): binom(2k, k) / 4^k.
inline std::vector<Rational> inv_sqrt_series(int count) {
  std::vector<Rational> out;
  for (int k = 0; k < count; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    out.emplace_back(binomial(2 * k, k), four_k);
  }
  return out;
}

/// Taylor coefficients of (1 - xi)^(1/2): -binom(2k, k) / ((2k - 1) 4^k).
inline std::vector<Rational> sqrt_series(int count) {
  std::vector<Rational> out;
  for (int k = 0; k < count; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    out.emplace_back(mpz_class(-binomial(2 * k, k)), mpz_class((2 * k - 1) * four_k));
  }
  return out;
}

/// Coefficients of p(x0 + t) in powers of t, by binomial expansion.
inline std::vector<Rational> taylor_shift(const Poly& p, const Rational& x0) {
  std::vector<Rational> out(p.coeffs().size());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    Rational x_pow(1);
    for (std::size_t j = i + 1; j-- > 0;) {
      // term c_i * binom(i, j) * x0^(i-j), accumulated from j = i downwards
      out[j] += p.coeffs()[i] * Rational(binomial(i, j), 1) * x_pow;
      x_pow *= x0;
    }
  }
  return out;
}

/// Index of the first nonzero Taylor coefficient of p at x0 (the
/// multiplicity of x0 as a root); `cap` if none below cap.
inline int vanishing_order(const Poly& p, const Rational& x0, int cap) {
  const auto t = taylor_shift(p, x0);
  for (int k = 0; k < cap; ++k) {
    if (k < static_cast<int>(t.size()) && !t[static_cast<std::size_t>(k)].is_zero()) return k;
  }
  return cap;
}

/// Common order of z -> a/b at +-1: multiplicity of 1 in a - b and of -1 in
/// a + b, whichever is smaller.
inline int order_by_taylor(const Poly& a, const Poly& b) {
  const int cap = std::max(a.degree(), b.degree()) + 2;
  return std::min(vanishing_order(a - b, Rational(1), cap), vanishing_order(a + b, Rational(-1), cap));
}

/// Rank by integer row elimination after clearing each row's denominators;
/// rows are divided by their content after every update to bound growth.
inline std::size_t integer_rank(const signiter::RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_class d = m(r, c).denominator();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).numerator() * (lcm / m(r, c).denominator());
  }

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      mpz_class content = 0;
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a[r][k].get_mpz_t());
      }
      a[r][c] = 0;
      if (content > 1) {
        for (std::size_t k = c + 1; k < cols; ++k) a[r][k] /= content;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
