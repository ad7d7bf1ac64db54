#include "signiter/pade.hpp"

#include <algorithm>
#include <stdexcept>

#include "signiter/errors.hpp"
#include "signiter/exact_linalg.hpp"

namespace signiter {

namespace {

Rational series_coeff(const PowerSeries& series, int k) {
  if (k < 0) return {};
  return series.coeffs.at(static_cast<std::size_t>(k));
}

}  // namespace

PowerSeries series_coefficients(SeriesKind kind, int count) {
  if (count < 1) throw std::invalid_argument("series_coefficients: count must be at least 1");
  const Rational alpha = kind == SeriesKind::inv_sqrt ? Rational(-1, 2) : Rational(1, 2);

  // (1 - xi)^alpha = sum_k binom(alpha, k) (-xi)^k, so consecutive
  // coefficients satisfy c_{k+1} = c_k (k - alpha) / (k + 1).
  PowerSeries series{kind, {Rational(1)}};
  series.coeffs.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k + 1 < count; ++k) {
    series.coeffs.push_back(series.coeffs.back() * (Rational(k) - alpha) / Rational(k + 1));
  }
  return series;
}

PadePair pade_approximant(const PowerSeries& series, int mu, int ell) {
  if (mu < 0 || ell < 0) throw std::invalid_argument("pade_approximant: negative degree");
  if (static_cast<int>(series.coeffs.size()) < mu + ell + 1) {
    throw std::invalid_argument("pade_approximant: series has fewer than mu+ell+1 coefficients");
  }

  // Unknowns q_1..q_ell; for k = mu+1..mu+ell the coefficient of xi^k in
  // series * Q must vanish: sum_{j=1}^{ell} c_{k-j} q_j = -c_k.
  std::vector<Rational> q(static_cast<std::size_t>(ell) + 1);
  q[0] = 1;
  if (ell > 0) {
    RationalMatrix system(static_cast<std::size_t>(ell), static_cast<std::size_t>(ell));
    RationalVector rhs(static_cast<std::size_t>(ell));
    for (int row = 0; row < ell; ++row) {
      const int k = mu + 1 + row;
      for (int j = 1; j <= ell; ++j) {
        system(static_cast<std::size_t>(row), static_cast<std::size_t>(j - 1)) = series_coeff(series, k - j);
      }
      rhs[static_cast<std::size_t>(row)] = -series_coeff(series, k);
    }
    const RationalVector sol = solve(system, rhs);
    for (int j = 1; j <= ell; ++j) q[static_cast<std::size_t>(j)] = sol[static_cast<std::size_t>(j - 1)];
  }

  std::vector<Rational> p(static_cast<std::size_t>(mu) + 1);
  for (int k = 0; k <= mu; ++k) {
    for (int j = 0; j <= std::min(k, ell); ++j) {
      p[static_cast<std::size_t>(k)] += series_coeff(series, k - j) * q[static_cast<std::size_t>(j)];
    }
  }
  return {Poly(std::move(p)), Poly(std::move(q)), mu, ell};
}

bool matches_series(const PowerSeries& series, const PadePair& pair) {
  const int order = pair.mu + pair.ell;
  if (static_cast<int>(series.coeffs.size()) < order + 1) return false;
  if (pair.numerator.degree() > pair.mu || pair.denominator.degree() > pair.ell) return false;
  for (int k = 0; k <= order; ++k) {
    Rational acc = -pair.numerator.coeff(k);
    for (int j = 0; j <= std::min(k, pair.denominator.degree()); ++j) {
      acc += series_coeff(series, k - j) * pair.denominator.coeff(j);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

PadePair reciprocal_pair(const PadePair& pair) {
  const Rational p0 = pair.numerator.coeff(0);
  if (p0.is_zero()) throw std::domain_error("reciprocal_pair: numerator vanishes at 0");
  const Rational inv = Rational(1) / p0;
  return {pair.denominator * inv, pair.numerator * inv, pair.ell, pair.mu};
}

Poly substitute_one_minus_z_squared(const Poly& p) { return compose(p, Poly({1, 0, -1})); }

std::string_view to_string(Family family) {
  return family == Family::pade ? "pade" : "reciprocal-pade";
}

Family family_from_string(std::string_view name) {
  if (name == "pade") return Family::pade;
  if (name == "reciprocal-pade") return Family::reciprocal_pade;
  throw ParseError("unknown iteration family '" + std::string(name) + "'");
}

IterationSpec IterationSpec::from_polynomials(const Poly& numerator, const Poly& denominator) {
  if (numerator.is_zero() || denominator.is_zero()) {
    throw std::invalid_argument("iteration needs nonzero numerator and denominator");
  }
  const int m = numerator.degree();
  const int n = denominator.degree();
  if ((m + n) % 2 == 0) throw std::invalid_argument("m+n must be odd");
  if (m + n < 3) throw std::invalid_argument("order s = (m+n+1)/2 must be at least 2");

  const bool odd_over_even = numerator.is_odd() && denominator.is_even();
  const bool even_over_odd = numerator.is_even() && denominator.is_odd();
  if (!odd_over_even && !even_over_odd) {
    throw std::invalid_argument("iteration is not an odd function of z");
  }
  if (poly_gcd(numerator, denominator).degree() != 0) {
    throw std::invalid_argument("numerator and denominator are not coprime");
  }

  auto [num, den] = canonical_scaling({numerator, denominator});
  const Family family = m % 2 == 1 ? Family::pade : Family::reciprocal_pade;
  return IterationSpec(std::move(num), std::move(den), family);
}

std::string IterationSpec::label() const {
  return "phi_{" + std::to_string(m()) + "," + std::to_string(n()) + "}";
}

IterationSpec build_phi(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
  if ((m + n) % 2 == 0) throw std::invalid_argument("m+n must be odd");
  if (m == 1 && n == 0) throw std::invalid_argument("trivial iteration: phi_{1,0}(z) = z");
  if (m + n < 3) throw std::invalid_argument("order s = (m+n+1)/2 must be at least 2");

  const Poly z = Poly::identity();
  Poly num;
  Poly den;
  if (m % 2 == 1) {
    const int mu = (m - 1) / 2;
    const int ell = n / 2;
    const PadePair pq = pade_approximant(series_coefficients(SeriesKind::inv_sqrt, mu + ell + 1), mu, ell);
    num = z * substitute_one_minus_z_squared(pq.numerator);
    den = substitute_one_minus_z_squared(pq.denominator);
  } else {
    // The (m/2, (n-1)/2) approximant to (1-xi)^(1/2) is the reciprocal of the
    // ((n-1)/2, m/2) approximant to (1-xi)^(-1/2).
    const int mu = m / 2;
    const int ell = (n - 1) / 2;
    const PadePair inv = pade_approximant(series_coefficients(SeriesKind::inv_sqrt, mu + ell + 1), ell, mu);
    const PadePair pq = reciprocal_pair(inv);
    num = substitute_one_minus_z_squared(pq.numerator);
    den = z * substitute_one_minus_z_squared(pq.denominator);
  }
  if (num.degree() != m || den.degree() != n) {
    throw std::logic_error("Pade approximant is degenerate for " + std::to_string(m) + "," + std::to_string(n));
  }
  return IterationSpec::from_polynomials(num, den);
}

std::vector<IterationSpec> family_table(int s) {
  if (s < 2) throw std::invalid_argument("order s must be at least 2");
  std::vector<IterationSpec> table;
  for (int m = 0; m <= 2 * s - 1; ++m) table.push_back(build_phi(m, 2 * s - 1 - m));
  return table;
}

}  // namespace signiter
