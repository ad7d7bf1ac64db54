#include "signiter/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace signiter {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, int power) {
  if (power < 0) throw std::invalid_argument("monomial with negative power");
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

Poly Poly::identity() { return Poly({0, 1}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return is_zero() ? Rational{} : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::reflected() const {
  auto coeffs = coeffs_;
  for (std::size_t i = 1; i < coeffs.size(); i += 2) coeffs[i] = -coeffs[i];
  return Poly(std::move(coeffs));
}

bool Poly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

bool Poly::is_odd() const {
  for (std::size_t i = 0; i < coeffs_.size(); i += 2) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) {
      out += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Poly Poly::operator-() const {
  auto coeffs = coeffs_;
  for (auto& c : coeffs) c = -c;
  return Poly(std::move(coeffs));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> product(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      product[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& k) {
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> coeffs(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) coeffs[static_cast<std::size_t>(i - 1)] = p.coeff(i) * i;
  return Poly(std::move(coeffs));
}

Poly antiderivative(const Poly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> coeffs(static_cast<std::size_t>(p.degree()) + 2);
  for (int i = 0; i <= p.degree(); ++i) {
    coeffs[static_cast<std::size_t>(i + 1)] = p.coeff(i) / Rational(i + 1);
  }
  return Poly(std::move(coeffs));
}

Rational eval_derivative_at(const Poly& p, int k, const Rational& x) {
  if (k < 0) throw std::invalid_argument("negative derivative order");
  Poly d = p;
  for (int i = 0; i < k && !d.is_zero(); ++i) d = derivative(d);
  return d(x);
}

Poly compose(const Poly& outer, const Poly& inner) {
  Poly acc;
  const auto& c = outer.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Poly::constant(*it);
  return acc;
}

Poly pow(const Poly& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  Poly result = Poly::constant(1);
  for (int i = 0; i < exponent; ++i) result *= p;
  return result;
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly quotient;
  Poly remainder = dividend;
  const Rational lead = divisor.leading();
  while (remainder.degree() >= divisor.degree()) {
    const int shift = remainder.degree() - divisor.degree();
    const Poly term = Poly::monomial(remainder.leading() / lead, shift);
    quotient += term;
    remainder -= term * divisor;
  }
  return {quotient, remainder};
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  Poly x = p;
  Poly y = q;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x * (Rational(1) / x.leading());
}

PolyPair canonical_scaling(const PolyPair& pair) {
  if (pair.a.is_zero() && pair.b.is_zero()) return pair;

  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const Poly* p : {&pair.a, &pair.b}) {
    for (const auto& c : p->coeffs()) {
      mpz_class d = c.denominator();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
      mpz_class n = c.numerator();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
  }
  // Every coefficient c = n/d; multiplying by lcm(d)/gcd(n) clears
  // denominators and leaves collective gcd 1.
  Rational scale(den_lcm, num_gcd);
  const Poly& sign_source = pair.b.is_zero() ? pair.a : pair.b;
  if (sign_source.leading().sign() < 0) scale = -scale;
  return {pair.a * scale, pair.b * scale};
}

}  // namespace signiter
