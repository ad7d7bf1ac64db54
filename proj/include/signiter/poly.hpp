#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "signiter/rational.hpp"

namespace signiter {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// powers. Trailing zero coefficients are never stored, so the zero
/// polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int power);
  /// The identity polynomial z.
  static Poly identity();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of z^i; zero for i outside [0, degree].
  Rational coeff(int i) const;
  /// Highest nonzero coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  /// p(-z).
  Poly reflected() const;
  bool is_even() const;
  bool is_odd() const;

  /// Human-readable form, e.g. "z^3 + 3z" (highest power first).
  std::string to_string(char var = 'z') const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& k);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly p, const Rational& k) { return p *= k; }
  friend Poly operator*(const Rational& k, Poly p) { return p *= k; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly derivative(const Poly& p);
/// Primitive with zero constant term.
Poly antiderivative(const Poly& p);
/// p^(k)(x); k = 0 is plain evaluation.
Rational eval_derivative_at(const Poly& p, int k, const Rational& x);

/// outer(inner(z)) by Horner's scheme.
Poly compose(const Poly& outer, const Poly& inner);
Poly pow(const Poly& p, int exponent);

/// Euclidean division; throws std::domain_error when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);
/// Monic gcd; throws std::invalid_argument when both inputs are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

/// A numerator/denominator pair of polynomials.
struct PolyPair {
  Poly a;
  Poly b;

  friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

/// Scales (a, b) by the rational that makes every coefficient an integer with
/// collective gcd 1 and the leading coefficient of b positive (of a, when b is
/// zero). Two pairs are proportional iff their canonical forms are equal.
/// The zero pair is returned unchanged.
PolyPair canonical_scaling(const PolyPair& pair);

}  // namespace signiter
