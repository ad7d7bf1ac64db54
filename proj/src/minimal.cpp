#include "signiter/minimal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace signiter {

namespace {

// d^k/dz^k z^j evaluated at z = x, for x = +1 or -1.
Rational monomial_derivative_at(int j, int k, int x) {
  if (j < k) return {};
  mpz_class falling = 1;
  for (int i = j - k + 1; i <= j; ++i) falling *= i;
  if (x < 0 && (j - k) % 2 == 1) falling = -falling;
  return Rational(falling, 1);
}

Poly z_squared_minus_one() { return Poly({-1, 0, 1}); }

PolyPair recursion_unscaled(int m, int n) {
  if (n == -1) return {pow(z_squared_minus_one(), m / 2), Poly{}};
  if (m == -1) return {Poly{}, pow(z_squared_minus_one(), n / 2)};
  if (m == 1 && n == 0) return {Poly::identity(), Poly::constant(1)};
  if (m == 0 && n == 1) return {Poly::constant(1), Poly::identity()};

  const PolyPair lower = recursion_unscaled(m - 1, n - 1);
  const Poly big_a = antiderivative(lower.a);
  const Poly big_b = antiderivative(lower.b);
  const Rational one(1);
  const Rational a1 = big_a(one), am1 = big_a(-one);
  const Rational b1 = big_b(one), bm1 = big_b(-one);
  const Rational half(1, 2);
  return {big_a + Poly::constant(half * (b1 - bm1 - a1 - am1)),
          big_b + Poly::constant(half * (a1 - am1 - b1 - bm1))};
}

}  // namespace

OrderConditionSystem order_condition_matrix(int m, int n, int s) {
  if (s < 1) throw std::invalid_argument("order_condition_matrix: s must be at least 1");
  if (m < -1 || n < -1) throw std::invalid_argument("order_condition_matrix: degree below -1");

  const auto a_cols = static_cast<std::size_t>(m + 1);
  const auto b_cols = static_cast<std::size_t>(n + 1);
  RationalMatrix matrix(2 * static_cast<std::size_t>(s), a_cols + b_cols);
  for (int k = 0; k < s; ++k) {
    const auto plus = 2 * static_cast<std::size_t>(k);
    const auto minus = plus + 1;
    for (int j = 0; j <= m; ++j) {
      const auto col = static_cast<std::size_t>(j);
      matrix(plus, col) = monomial_derivative_at(j, k, 1);
      matrix(minus, col) = monomial_derivative_at(j, k, -1);
    }
    for (int j = 0; j <= n; ++j) {
      const auto col = a_cols + static_cast<std::size_t>(j);
      matrix(plus, col) = -monomial_derivative_at(j, k, 1);
      matrix(minus, col) = monomial_derivative_at(j, k, -1);
    }
  }
  return {m, n, s, std::move(matrix)};
}

std::vector<RationalVector> exact_nullspace(const OrderConditionSystem& sys) {
  return nullspace_basis(sys.matrix);
}

PolyPair split_coefficients(const OrderConditionSystem& sys, const RationalVector& v) {
  const auto a_cols = static_cast<std::ptrdiff_t>(sys.m + 1);
  if (v.size() != sys.matrix.cols()) throw std::invalid_argument("coefficient vector has wrong length");
  return {Poly(RationalVector(v.begin(), v.begin() + a_cols)), Poly(RationalVector(v.begin() + a_cols, v.end()))};
}

MinimalPair construct_by_recursion(int m, int n) {
  if (std::min(m, n) < -1 || m + n < 1 || (m + n) % 2 == 0) {
    throw std::invalid_argument("construct_by_recursion: need m+n odd and positive, min(m,n) >= -1, got (" +
                                std::to_string(m) + "," + std::to_string(n) + ")");
  }
  const PolyPair scaled = canonical_scaling(recursion_unscaled(m, n));
  return {scaled.a, scaled.b, m, n, (m + n + 1) / 2};
}

MinimalPair construct_by_nullspace(int m, int n) {
  const int s = (m + n + 1) / 2;
  const OrderConditionSystem sys = order_condition_matrix(m, n, s);
  const auto basis = exact_nullspace(sys);
  if (basis.size() != 1) {
    throw std::logic_error("order-condition system for (" + std::to_string(m) + "," + std::to_string(n) +
                           ") has nullity " + std::to_string(basis.size()));
  }
  const PolyPair scaled = canonical_scaling(split_coefficients(sys, basis.front()));
  return {scaled.a, scaled.b, m, n, s};
}

OrderCheck verify_order_conditions(const Poly& a, const Poly& b, int s) {
  const Rational one(1);
  OrderCheck check;
  check.holds = true;
  for (int k = 0; k < s && check.holds; ++k) {
    check.holds = eval_derivative_at(a, k, one) == eval_derivative_at(b, k, one) &&
                  eval_derivative_at(a, k, -one) == -eval_derivative_at(b, k, -one);
  }
  check.strict_at_plus1 = eval_derivative_at(a, s, one) != eval_derivative_at(b, s, one);
  check.strict_at_minus1 = eval_derivative_at(a, s, -one) != -eval_derivative_at(b, s, -one);
  return check;
}

int exact_order_at_fixed_points(const Poly& a, const Poly& b) {
  const Rational one(1);
  if (b(one).is_zero() || a(one) != b(one) || b(-one).is_zero() || a(-one) != -b(-one)) {
    throw std::domain_error("not a fixed point of the iteration");
  }
  // a - b cannot vanish to every order at 1 together with a + b at -1 unless
  // a = b = 0, so the loop ends by max degree + 1.
  const int bound = std::max(a.degree(), b.degree()) + 1;
  int order = 1;
  while (order <= bound && verify_order_conditions(a, b, order + 1).holds) ++order;
  return order;
}

bool ScanReport::certified() const {
  return std::all_of(records.begin(), records.end(), [](const ScanRecord& r) { return r.certified; });
}

ScanReport optimality_scan(int s) {
  if (s < 2) throw std::invalid_argument("optimality_scan: s must be at least 2");
  ScanReport report{s, {}};
  for (int total = 0; total <= 2 * s - 1; ++total) {
    for (int m = 0; m <= total; ++m) {
      const int n = total - m;
      const OrderConditionSystem sys = order_condition_matrix(m, n, s);
      const auto basis = exact_nullspace(sys);
      ScanRecord record{m, n, s, basis.size(), std::nullopt, false};
      if (total < 2 * s - 1) {
        record.certified = basis.empty();
      } else {
        bool strict = false;
        if (basis.size() == 1) {
          const PolyPair pair = split_coefficients(sys, basis.front());
          const OrderCheck check = verify_order_conditions(pair.a, pair.b, s);
          strict = pair.a.degree() == m && pair.b.degree() == n && check.holds && check.strict_at_plus1 &&
                   check.strict_at_minus1;
        }
        record.strict = strict;
        record.certified = basis.size() == 1 && strict;
      }
      report.records.push_back(record);
    }
  }
  return report;
}

bool equal_up_to_scalar(const PolyPair& p1, const PolyPair& p2) {
  return canonical_scaling(p1) == canonical_scaling(p2);
}

}  // namespace signiter
