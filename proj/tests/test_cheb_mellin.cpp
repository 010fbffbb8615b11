#include <doctest.h>

#include "chebmellin/cheb_mellin.hpp"
#include "chebmellin/errors.hpp"
#include "chebmellin/numerics.hpp"
#include "test_support.hpp"

using namespace chebmellin;
using testsupport::Gen;

TEST_CASE("chebyshev polynomials match explicit sums") {
  for (unsigned n = 0; n <= 20; ++n) {
    CHECK(chebyshev_poly(ChebKind::U, n) == testsupport::explicit_U(n));
    CHECK(chebyshev_poly(ChebKind::T, n) == testsupport::explicit_T(n));
  }
  CHECK(chebyshev_U_signed(-1).is_zero());
  CHECK(chebyshev_U_signed(-3) == -chebyshev_poly(ChebKind::U, 1));
}

TEST_CASE("polynomial factors, second kind") {
  CHECK(p_poly_U(0).coeffs() == std::vector<Rational>{Rational(1, 2)});
  CHECK(p_poly_U(1).coeffs() == std::vector<Rational>{Rational(1)});
  CHECK(p_poly_U(2) == RatPoly({Rational(-3, 8), Rational(3, 4)}));
  CHECK(p_poly_U(4) == RatPoly({Rational(21, 32), Rational(-5, 8), Rational(5, 8)}));
  MellinClosedForm f0 = mellin_U_closed(0), f1 = mellin_U_closed(1), f2 = mellin_U_closed(2);
  CHECK(f0.gamma_den_offset == Rational(3, 4));
  CHECK(f1.epsilon == 1);
  CHECK(f1.gamma_den_offset == Rational(5, 4));
  CHECK(f2.gamma_den_offset == Rational(7, 4));
  auto table = p_poly_U_table(40);
  Gen g(41);
  for (int i = 0; i < 60; ++i) {
    unsigned n = static_cast<unsigned>(g.range(0, 40));
    const RatPoly& p = table[n];
    CHECK(p.degree() == n / 2);
    CHECK(poly_reflect(p) == ((n / 2) % 2 ? -p : p));
  }
}

TEST_CASE("exact values against Beta-integral oracles") {
  CHECK(mellin_eval_exact(mellin_U_closed(0), 2) == Rational(2, 3));
  CHECK(mellin_eval_exact(mellin_U_closed(1), 1) == Rational(4, 3));
  CHECK(mellin_eval_exact(mellin_U_closed(2), 2) == Rational(6, 7));
  CHECK(mellin_eval_exact(mellin_T_closed(2), 2) == Rational(-1, 15));
  for (unsigned n = 0; n <= 14; ++n)
    for (long s = (n % 2 ? 1 : 2); s <= 9; s += 2) {
      CHECK(mellin_eval_exact(mellin_U_closed(n), s) ==
            testsupport::weighted_moment(testsupport::explicit_U(n), s, Rational(-1, 4)));
      CHECK(mellin_eval_exact(mellin_T_closed(n), s) ==
            testsupport::weighted_moment(testsupport::explicit_T(n), s, Rational(1, 2)));
    }
}

TEST_CASE("first-kind factor") {
  MellinClosedForm t4 = mellin_T_closed(4);
  CHECK(t4.poly == RatPoly({Rational(15), Rational(-16), Rational(1)}));
  CHECK(t4.gamma_den_offset == Rational(7, 2));
  // The printed constant is off by a factor 2 at n = 2.
  CHECK(mellin_eval_exact(mellin_T_printed(2), 2) == Rational(-1, 30));
  for (unsigned n = 2; n <= 12; ++n) {
    const RatPoly& p = mellin_T_closed(n).poly;
    CHECK(p(Rational(static_cast<long>(n * n) - 1)) == 0);
    for (long k = static_cast<long>(n) - 3; k >= 1; k -= 2) CHECK(p(Rational(k)) == 0);
  }
}

TEST_CASE("index ratios") {
  Gen g(43);
  for (int i = 0; i < 40; ++i) {
    Rational s = g.positive_rational();
    unsigned n = static_cast<unsigned>(g.range(0, 15));
    CHECK(mellin_ratio_prop4(n, s) == mellin_ratio_telescoped(n, s));
    CHECK(mellin_ratio_telescoped(2, s) == 3 * (2 * s - 1) / (2 * s + 3));
  }
}

TEST_CASE("3F2 representations") {
  const prec_t bits = 256;
  for (unsigned n = 0; n <= 9; ++n)
    for (const BigComplex& s : {BigComplex(Rational(5, 2), bits), BigComplex(Rational(1), Rational(-2), bits)}) {
      BigComplex ref = mellin_eval(mellin_U_closed(n), s, bits);
      CHECK(relative_difference(lemma6_eval(n, s, bits), ref).to_double() < 1e-60);
      CHECK(relative_difference(u_hypergeometric_eval(n, s, UHyperVariant::a, bits), ref).to_double() < 1e-60);
      CHECK(relative_difference(u_hypergeometric_eval(n, s, UHyperVariant::b, bits), ref).to_double() < 1e-60);
    }
}

TEST_CASE("index-shift identities") {
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned m = 0; m <= 3; ++m) {
      IdentityOutcome o = verify_index_shift_a(n, m, Rational(7, 3));
      if (o.applicable) CHECK_MESSAGE(o.ok, o.detail);
    }
    for (unsigned k = 0; 2 * k <= n; ++k) {
      IdentityOutcome o = verify_index_shift_b(n, k, Rational(7, 3));
      if (o.applicable) CHECK_MESSAGE(o.ok, o.detail);
    }
  }
}

TEST_CASE("generating functions") {
  GeneratingReport u = verify_generating_functions(ChebKind::U, 2, 8, Rational(1, 16), 256);
  CHECK(u.max_coefficient_deviation < 1e-60);
  REQUIRE(u.summation_deviation.has_value());
  CHECK(*u.summation_deviation < 1e-40);
  CHECK(*u.direct_deviation < 1e-40);
  GeneratingReport t = verify_generating_functions(ChebKind::T, Rational(7, 2), 8, std::nullopt, 256);
  CHECK(t.max_coefficient_deviation < 1e-60);
  CHECK_THROWS_AS(verify_generating_functions(ChebKind::U, 2, 8, Rational(1, 4), 256), DivergenceError);
}

TEST_CASE("polynomial identities") {
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned n = 1; n <= 5; ++n) CHECK(verify_composition_identities(m, n).ok);
  for (unsigned n = 0; n <= 10; ++n) CHECK(verify_explicit_sums(n).ok);
  CHECK_FALSE(verify_explicit_sums(3, true).ok);
  for (unsigned n = 1; n <= 10; ++n)
    for (PellKind k : {PellKind::pell, PellKind::mv_b, PellKind::mv_B}) CHECK(verify_pell_morgan_voyce(k, n).ok);
  // Values at x = 1 are the Pell numbers 1, 2, 5, 12, 29.
  CHECK(pell_morgan_voyce(PellKind::pell, 5)(1) == 29);
}

TEST_CASE("series and integral representations") {
  for (unsigned j = 1; j <= 3; ++j) CHECK(exponential_generating_deviation(j, Rational(1, 2), Rational(1, 3), 256) < 1e-40);
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(verify_beta_transform_exact(n, Rational(1, 2), Rational(1, 3)).ok);
    CHECK(beta_transform_quadrature_deviation(n, Rational(2), Rational(-1, 4), 256) < 1e-9);
  }
  for (unsigned n : {0u, 3u, 6u}) {
    BigComplex a = double_sum_eval(n, Rational(7, 2), 256);
    BigComplex b = mellin_eval(mellin_U_closed(n), BigComplex(Rational(7, 2), 256), 256);
    CHECK(relative_difference(a, b).to_double() < 1e-25);
  }
}
