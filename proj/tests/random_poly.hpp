#pragma once

#include <random>

#include "signiter/poly.hpp"

namespace testing_support {

// Small random rationals and polynomials for property checks; seeded so
// failures reproduce.
inline signiter::Rational random_rational(std::mt19937_64& gen) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return signiter::Rational(num(gen), den(gen));
}

inline signiter::Poly random_poly(std::mt19937_64& gen, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  const int d = deg(gen);
  std::vector<signiter::Rational> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.push_back(random_rational(gen));
  return signiter::Poly(std::move(coeffs));
}

}  // namespace testing_support
