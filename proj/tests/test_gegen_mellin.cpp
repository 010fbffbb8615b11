#include <doctest.h>

#include "chebmellin/errors.hpp"
#include "chebmellin/gegen_mellin.hpp"
#include "chebmellin/numerics.hpp"
#include "test_support.hpp"

using namespace chebmellin;
using testsupport::Gen;

namespace {
const std::vector<Rational> kLambdas{Rational(1, 2), 1, Rational(3, 2), 2, Rational(7, 3)};
}

TEST_CASE("gegenbauer polynomials") {
  for (const auto& lam : kLambdas)
    for (unsigned n = 0; n <= 15; ++n) CHECK(gegenbauer_poly(n, lam) == testsupport::explicit_C(n, lam));
  CHECK(legendre_poly(2) == RatPoly({Rational(-1, 2), Rational(0), Rational(3, 2)}, Variable::x));
  CHECK(gegenbauer_poly(2, Rational(7, 3)) == RatPoly({Rational(-7, 3), 0, Rational(140, 9)}, Variable::x));
  auto table = gegenbauer_table(6, 1);
  for (unsigned n = 0; n <= 6; ++n) CHECK(table[n] == testsupport::explicit_U(n));
}

TEST_CASE("polynomial factors") {
  CHECK(p_poly_gegen(2, 1) == RatPoly({Rational(-1, 4), Rational(1, 2)}));
  CHECK(p_poly_gegen(4, 1) == RatPoly({Rational(21, 80), Rational(-1, 4), Rational(1, 4)}));
  CHECK(p_poly_beta(4, 0) == RatPoly({Rational(1, 4), Rational(-1, 4), Rational(1, 4)}));
  CHECK(p_poly_beta(2, 0) == RatPoly({Rational(-1, 4), Rational(1, 2)}));
  CHECK(GegenParams::from_beta(-1).lambda == Rational(7, 2));
  CHECK(GegenParams::from_lambda(Rational(1, 2)).beta == Rational(1, 2));
  Gen g(61);
  for (int i = 0; i < 40; ++i) {
    Rational lam = g.positive_rational(30, 7);
    unsigned n = static_cast<unsigned>(g.range(0, 16));
    RatPoly p = p_poly_gegen(n, lam);
    CHECK(p.degree() == n / 2);
    CHECK(poly_reflect(p) == ((n / 2) % 2 ? -p : p));
    CHECK(p == p_poly_beta(n, GegenParams::from_lambda(lam).beta));
  }
}

TEST_CASE("exact values against Beta-integral oracles") {
  for (const auto& lam : kLambdas)
    for (unsigned n = 0; n <= 10; ++n)
      for (long s = (n % 2 ? 1 : 2); s <= 7; s += 2) {
        const Rational want =
            testsupport::weighted_moment(testsupport::explicit_C(n, lam), s, lam / 2 - Rational(3, 4));
        CHECK(mellin_eval_exact(mellin_G_closed(n, lam), s) == want);
        // Without (2 lambda)_n the value is off by exactly that factor.
        CHECK(*mellin_eval_exact(mellin_G_closed(n, lam, false), s) * pochhammer(2 * lam, n) == want);
      }
  CHECK(mellin_eval_exact(mellin_G_closed(1, 1), 1) == Rational(4, 3));
}

TEST_CASE("reduction at lambda = 1") {
  for (unsigned n = 0; n <= 10; ++n) {
    MellinClosedForm g = mellin_G_closed(n, 1), u = mellin_U_closed(n);
    CHECK(g.gamma_den_offset == u.gamma_den_offset);
    CHECK(mellin_ratio_exact(g, Rational(9, 4), u, Rational(9, 4)) == Rational(1));
  }
}

TEST_CASE("difference equation and recurrence") {
  for (const auto& lam : kLambdas) {
    for (unsigned n = 0; n <= 15; ++n) CHECK(difference_equation_residual(n, lam).is_zero());
    for (unsigned n = 2; n <= 12; ++n) CHECK(verify_gegen_index_recurrence(n, lam, Rational(5, 3)).ok);
    CHECK(gegen_base_ratio(lam, Rational(5, 2), true) == 1);
    CHECK(gegen_base_ratio(lam, Rational(5, 2), false) == 1 / (2 * lam));
  }
}

TEST_CASE("elementary forms at beta = -m") {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned m = 0; m <= 3; ++m)
      for (const auto& s : {Rational(3), Rational(7, 3)}) {
        Corollary1Outcome o = corollary1_check(n, m, s);
        if (o.applicable) CHECK_MESSAGE(o.ok, o.detail);
      }
}

TEST_CASE("continuous Hahn proportionality") {
  std::vector<BigComplex> samples;
  for (double im : {0.0, 0.5, 1.5, 3.0}) samples.emplace_back(0.3, im, 256);
  for (const auto& lam : {Rational(1), Rational(3, 2)})
    for (unsigned n = 0; n <= 8; ++n) CHECK(hahn_proportionality(n, lam, samples).spread < 1e-40);
}

TEST_CASE("generating function") {
  for (const auto& lam : kLambdas) CHECK(gegen_generating_deviation(lam, 2, 10) < 1e-40);
}

TEST_CASE("expansion and limit identities") {
  for (unsigned m = 0; m <= 10; ++m) {
    CHECK(verify_gegen_expansion_a(m).ok);
    CHECK(verify_gegen_expansion_b(m).ok);
    CHECK(verify_gegen_expansion_c(m, Rational(7, 3), Rational(3, 2)).ok);
    CHECK(verify_eq52(m).ok);
    CHECK(verify_legendre_identity(m).ok);
  }
  for (unsigned n : {1u, 4u, 9u}) {
    LargeLambdaReport r = large_lambda_check(n, Rational(1, 3));
    CHECK(r.within_bound);
    CHECK(r.decays);
  }
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(eq51_deviation(n, Rational(3, 2), Rational(1, 4)) < 1e-9);
    CHECK(eq23_deviation(n, Rational(-1, 2), Rational(3)) < 1e-9);
  }
}
