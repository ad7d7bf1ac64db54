#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "signiter/poly.hpp"
#include "signiter/rational.hpp"

namespace signiter {

/// Which binomial series a PowerSeries truncates.
enum class SeriesKind {
  inv_sqrt,  // (1 - xi)^(-1/2)
  sqrt,      // (1 - xi)^(1/2)
};

struct PowerSeries {
  SeriesKind kind;
  std::vector<Rational> coeffs;  // ascending powers of xi
};

/// First `count` Taylor coefficients of (1 - xi)^alpha at xi = 0.
PowerSeries series_coefficients(SeriesKind kind, int count);

/// P/Q with deg P <= mu, deg Q <= ell and Q(0) = 1.
struct PadePair {
  Poly numerator;
  Poly denominator;
  int mu = 0;
  int ell = 0;
};

/// The (mu, ell) Pade approximant of `series`, from the exact linear system
/// matching coefficients 0..mu+ell. Throws SingularSystemError if that system
/// is singular, std::invalid_argument if the series is too short.
PadePair pade_approximant(const PowerSeries& series, int mu, int ell);

/// True iff series * Q - P vanishes through degree mu + ell.
bool matches_series(const PowerSeries& series, const PadePair& pair);

/// Q/P as an (ell, mu) pair, rescaled so the new denominator has constant
/// term 1. Throws std::domain_error if P(0) = 0.
PadePair reciprocal_pair(const PadePair& pair);

/// p(1 - z^2).
Poly substitute_one_minus_z_squared(const Poly& p);

enum class Family { pade, reciprocal_pade };

std::string_view to_string(Family family);
/// Throws ParseError for unknown names.
Family family_from_string(std::string_view name);

/// A rational sign iteration z -> num(z)/den(z) with deg num = m,
/// deg den = n, m + n = 2s - 1, s >= 2. Always canonically scaled
/// (see canonical_scaling), coprime and odd as a function.
class IterationSpec {
 public:
  /// Canonicalizes and validates; throws std::invalid_argument if the pair
  /// does not have the shape of a family member.
  static IterationSpec from_polynomials(const Poly& numerator, const Poly& denominator);

  int m() const { return numerator_.degree(); }
  int n() const { return denominator_.degree(); }
  int s() const { return (m() + n() + 1) / 2; }
  Family family() const { return family_; }
  const Poly& numerator() const { return numerator_; }
  const Poly& denominator() const { return denominator_; }

  /// "phi_{m,n}".
  std::string label() const;

  friend bool operator==(const IterationSpec&, const IterationSpec&) = default;

 private:
  IterationSpec(Poly numerator, Poly denominator, Family family)
      : numerator_(std::move(numerator)), denominator_(std::move(denominator)), family_(family) {}

  Poly numerator_;
  Poly denominator_;
  Family family_;
};

/// phi_{m,n}: for odd m the Pade iteration z P(1-z^2) / Q(1-z^2) built from
/// the ((m-1)/2, n/2) approximant to (1-xi)^(-1/2); for even m the reciprocal
/// iteration built from the (m/2, (n-1)/2) approximant to (1-xi)^(1/2).
/// Throws std::invalid_argument for negative degrees, even m + n, and the
/// order-1 shapes (1,0) and (0,1).
IterationSpec build_phi(int m, int n);

/// All 2s members of order s in ascending m. Throws for s < 2.
std::vector<IterationSpec> family_table(int s);

}  // namespace signiter
