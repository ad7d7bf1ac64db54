#include <doctest.h>

#include "oracles.hpp"
#include "signiter/errors.hpp"
#include "signiter/pade.hpp"
#include "signiter/serialize.hpp"

using namespace signiter;

namespace {

std::vector<std::pair<int, int>> family_pairs(int s_max) {
  std::vector<std::pair<int, int>> out;
  for (int s = 2; s <= s_max; ++s) {
    for (int m = 0; m <= 2 * s - 1; ++m) out.emplace_back(m, 2 * s - 1 - m);
  }
  return out;
}

}  // namespace

TEST_SUITE("pade-construct") {
  TEST_CASE("series coefficients examples") {
    using V = std::vector<Rational>;
    CHECK(series_coefficients(SeriesKind::inv_sqrt, 4).coeffs == V{1, Rational(1, 2), Rational(3, 8), Rational(5, 16)});
    CHECK(series_coefficients(SeriesKind::sqrt, 4).coeffs ==
          V{1, Rational(-1, 2), Rational(-1, 8), Rational(-1, 16)});
    CHECK(series_coefficients(SeriesKind::inv_sqrt, 1).coeffs == V{1});
    CHECK_THROWS_AS(series_coefficients(SeriesKind::sqrt, 0), std::invalid_argument);
  }

  TEST_CASE("series recurrence agrees with the central binomial formula") {
    const auto inv = series_coefficients(SeriesKind::inv_sqrt, 25);
    const auto sq = series_coefficients(SeriesKind::sqrt, 25);
    CHECK(inv.coeffs == oracle::inv_sqrt_series(25));
    CHECK(sq.coeffs == oracle::sqrt_series(25));
    CHECK(inv.kind == SeriesKind::inv_sqrt);
    for (std::size_t k = 1; k < 25; ++k) {
      CHECK(inv.coeffs[k].sign() > 0);
      CHECK(sq.coeffs[k].sign() < 0);
    }
  }

  TEST_CASE("pade approximant examples") {
    const auto h = series_coefficients(SeriesKind::inv_sqrt, 3);
    const PadePair p11 = pade_approximant(h, 1, 1);
    CHECK(p11.numerator == Poly({1, Rational(-1, 4)}));
    CHECK(p11.denominator == Poly({1, Rational(-3, 4)}));

    const PadePair p10 = pade_approximant(h, 1, 0);
    CHECK(p10.numerator == Poly({1, Rational(1, 2)}));
    CHECK(p10.denominator == Poly::constant(1));

    for (auto kind : {SeriesKind::inv_sqrt, SeriesKind::sqrt}) {
      const PadePair p00 = pade_approximant(series_coefficients(kind, 1), 0, 0);
      CHECK(p00.numerator == Poly::constant(1));
      CHECK(p00.denominator == Poly::constant(1));
    }

    CHECK_THROWS_AS(pade_approximant(h, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(pade_approximant(h, -1, 1), std::invalid_argument);
  }

  TEST_CASE("singular pade systems are reported") {
    // 1 + xi^2: the (0,1) system c_0 q_1 = -c_1 is fine, but the (1,1)
    // system c_1 q_1 = -c_2 reads 0 = -1.
    const PowerSeries even{SeriesKind::inv_sqrt, {1, 0, 1}};
    CHECK_THROWS_AS(pade_approximant(even, 1, 1), SingularSystemError);
  }

  TEST_CASE("every approximant meets the order condition") {
    for (auto kind : {SeriesKind::inv_sqrt, SeriesKind::sqrt}) {
      const auto series = series_coefficients(kind, 17);
      for (int mu = 0; mu <= 8; ++mu) {
        for (int ell = 0; ell <= 8; ++ell) {
          CAPTURE(mu);
          CAPTURE(ell);
          const PadePair pair = pade_approximant(series, mu, ell);
          CHECK(pair.denominator.coeff(0) == Rational(1));
          CHECK(pair.numerator.degree() == mu);
          CHECK(pair.denominator.degree() == ell);
          CHECK(matches_series(series, pair));
        }
      }
    }
  }

  TEST_CASE("matches_series rejects a perturbed pair") {
    const auto h = series_coefficients(SeriesKind::inv_sqrt, 5);
    PadePair pair = pade_approximant(h, 2, 2);
    CHECK(matches_series(h, pair));
    pair.numerator += Poly::monomial(Rational(1, 1000), 2);
    CHECK_FALSE(matches_series(h, pair));
  }

  TEST_CASE("reciprocal pair examples") {
    const PadePair p11{Poly({1, Rational(-1, 4)}), Poly({1, Rational(-3, 4)}), 1, 1};
    const PadePair r11 = reciprocal_pair(p11);
    CHECK(r11.numerator == Poly({1, Rational(-3, 4)}));
    CHECK(r11.denominator == Poly({1, Rational(-1, 4)}));

    const PadePair p10{Poly({1, Rational(1, 2)}), Poly::constant(1), 1, 0};
    const PadePair r10 = reciprocal_pair(p10);
    CHECK(r10.numerator == Poly::constant(1));
    CHECK(r10.denominator == Poly({1, Rational(1, 2)}));
    CHECK(r10.mu == 0);
    CHECK(r10.ell == 1);

    CHECK_THROWS_AS(reciprocal_pair(PadePair{Poly({0, 1}), Poly::constant(1), 1, 0}), std::domain_error);
  }

  TEST_CASE("reciprocals of (1-xi)^(-1/2) approximants approximate (1-xi)^(1/2)") {
    const auto h = series_coefficients(SeriesKind::inv_sqrt, 13);
    const auto g = series_coefficients(SeriesKind::sqrt, 13);
    for (int mu = 0; mu <= 6; ++mu) {
      for (int ell = 0; ell <= 6; ++ell) {
        const PadePair recip = reciprocal_pair(pade_approximant(h, mu, ell));
        CHECK(matches_series(g, recip));
        // Padé approximants are unique, so the direct solve agrees.
        const PadePair direct = pade_approximant(g, ell, mu);
        CHECK(recip.numerator == direct.numerator);
        CHECK(recip.denominator == direct.denominator);
      }
    }
  }

  TEST_CASE("substitute 1 - z^2 examples") {
    CHECK(substitute_one_minus_z_squared(Poly({1, Rational(1, 2)})) == Poly({Rational(3, 2), 0, Rational(-1, 2)}));
    CHECK(substitute_one_minus_z_squared(Poly({0, 1})) == Poly({1, 0, -1}));
    CHECK(substitute_one_minus_z_squared(Poly({1, Rational(-3, 4)})) == Poly({Rational(1, 4), 0, Rational(3, 4)}));
    CHECK(substitute_one_minus_z_squared(Poly{}).is_zero());
  }

  TEST_CASE("named iterations") {
    const IterationSpec newton = build_phi(2, 1);
    CHECK(newton.numerator() == Poly({1, 0, 1}));
    CHECK(newton.denominator() == Poly({0, 2}));
    CHECK(newton.family() == Family::reciprocal_pade);
    CHECK(newton.s() == 2);

    const IterationSpec newton_schulz = build_phi(3, 0);
    CHECK(newton_schulz.numerator() == Poly({0, 3, 0, -1}));
    CHECK(newton_schulz.denominator() == Poly({2}));
    CHECK(newton_schulz.family() == Family::pade);

    const IterationSpec halley = build_phi(3, 2);
    CHECK(halley.numerator() == Poly({0, 3, 0, 1}));
    CHECK(halley.denominator() == Poly({1, 0, 3}));
    CHECK(halley.s() == 3);
    CHECK(halley.label() == "phi_{3,2}");
  }

  TEST_CASE("build_phi rejects shapes outside the family") {
    CHECK_THROWS_WITH_AS(build_phi(2, 2), "m+n must be odd", std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_phi(1, 0), "trivial iteration: phi_{1,0}(z) = z", std::invalid_argument);
    CHECK_THROWS_AS(build_phi(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_phi(-1, 4), std::invalid_argument);
    CHECK_THROWS_AS(family_table(1), std::invalid_argument);
  }

  TEST_CASE("family invariants for s = 2..8") {
    for (const auto& [m, n] : family_pairs(8)) {
      CAPTURE(m);
      CAPTURE(n);
      const IterationSpec spec = build_phi(m, n);
      CHECK(spec.m() == m);
      CHECK(spec.n() == n);
      CHECK(spec.s() == (m + n + 1) / 2);
      CHECK((spec.family() == Family::pade) == (m % 2 == 1));
      CHECK(poly_gcd(spec.numerator(), spec.denominator()) == Poly::constant(1));
      // phi(-z) = -phi(z) as a polynomial identity.
      CHECK(spec.numerator().reflected() * spec.denominator() == -(spec.numerator() * spec.denominator().reflected()));
      CHECK(canonical_scaling({spec.numerator(), spec.denominator()}) == PolyPair{spec.numerator(), spec.denominator()});
      // Order s at both +1 and -1, counted by Taylor expansion.
      CHECK(oracle::order_by_taylor(spec.numerator(), spec.denominator()) == spec.s());
    }
  }

  TEST_CASE("phi_{m,n} phi_{n,m} = 1") {
    for (const auto& [m, n] : family_pairs(8)) {
      const IterationSpec fwd = build_phi(m, n);
      const IterationSpec back = build_phi(n, m);
      const Poly lhs = fwd.numerator() * back.numerator();
      const Poly rhs = fwd.denominator() * back.denominator();
      CHECK(canonical_scaling({lhs, Poly{}}) == canonical_scaling({rhs, Poly{}}));
    }
  }

  TEST_CASE("family table is ordered by m") {
    const auto table = family_table(3);
    REQUIRE(table.size() == 6);
    for (int m = 0; m < 6; ++m) {
      CHECK(table[static_cast<std::size_t>(m)].m() == m);
      CHECK(table[static_cast<std::size_t>(m)].n() == 5 - m);
    }
    CHECK(table[3] == build_phi(3, 2));
  }

  TEST_CASE("from_polynomials validates and canonicalizes") {
    const IterationSpec spec = IterationSpec::from_polynomials(Poly({Rational(3, 2), 0, Rational(3, 2)}), Poly({0, 3}));
    CHECK(spec == build_phi(2, 1));
    CHECK_THROWS_AS(IterationSpec::from_polynomials(Poly({1, 1, 1}), Poly({0, 2})), std::invalid_argument);
    CHECK_THROWS_AS(IterationSpec::from_polynomials(Poly({-1, 0, 1}), Poly({-1, 0, 1}) * Poly({0, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(IterationSpec::from_polynomials(Poly{}, Poly({0, 1})), std::invalid_argument);
  }
}

TEST_SUITE("iteration records") {
  TEST_CASE("structured record of Halley's iteration") {
    const Json j = to_json(build_phi(3, 2));
    CHECK(j.dump() ==
          R"({"m":3,"n":2,"s":3,"family":"pade","numerator":["0","3","0","1"],"denominator":["1","0","3"]})");
  }

  TEST_CASE("records re-parse to the same spec and bytes") {
    for (const auto& [m, n] : family_pairs(6)) {
      const IterationSpec spec = build_phi(m, n);
      const Json j = to_json(spec);
      const IterationSpec back = spec_from_json(Json::parse(j.dump(2)));
      CHECK(back == spec);
      CHECK(to_json(back).dump(2) == j.dump(2));
    }
  }

  TEST_CASE("non-canonical records are canonicalized on read") {
    const Json j = Json::parse(
        R"({"m":2,"n":1,"s":2,"family":"reciprocal-pade","numerator":["1/2","0","1/2"],"denominator":["0","1"]})");
    CHECK(spec_from_json(j) == build_phi(2, 1));
  }

  TEST_CASE("malformed records") {
    const char* bad[] = {
        R"({"m":2,"n":1,"s":2,"family":"pade","numerator":["1","0","1"],"denominator":["0","2"]})",
        R"({"m":3,"n":1,"s":2,"family":"reciprocal-pade","numerator":["1","0","1"],"denominator":["0","2"]})",
        R"({"m":2,"n":1,"s":2,"family":"reciprocal-pade","numerator":["1","0","x"],"denominator":["0","2"]})",
        R"({"m":2,"n":1,"s":2,"family":"reciprocal-pade","numerator":[1,0,1],"denominator":["0","2"]})",
        R"({"m":2,"n":1,"s":2,"numerator":["1","0","1"],"denominator":["0","2"]})",
        R"({"m":2,"n":2,"s":2,"family":"pade","numerator":["1","0","1"],"denominator":["1","0","2"]})",
    };
    for (const char* text : bad) {
      CAPTURE(text);
      CHECK_THROWS_AS(spec_from_json(Json::parse(text)), ParseError);
    }
  }
}
