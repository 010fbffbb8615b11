#include <doctest.h>

#include <mpfr.h>

#include <cmath>

#include "chebmellin/cheb_mellin.hpp"
#include "chebmellin/errors.hpp"
#include "chebmellin/gegen_mellin.hpp"
#include "chebmellin/numerics.hpp"
#include "chebmellin/quadrature.hpp"
#include "test_support.hpp"

using namespace chebmellin;
using testsupport::Gen;

TEST_CASE("log gamma against MPFR on the positive axis") {
  const prec_t bits = 256;
  for (const Rational& x : {Rational(1, 7), Rational(1, 2), Rational(3, 4), Rational(5), Rational(123, 10), Rational(1000, 3)}) {
    BigFloat v(x, bits), ref(0L, bits);
    mpfr_lngamma(ref.get(), v.get(), MPFR_RNDN);
    BigComplex lg = log_gamma(BigComplex(x, bits));
    CHECK(abs(lg.re() - ref).to_double() < 1e-70 * std::max(1.0, std::fabs(ref.to_double())));
    CHECK(std::fabs(lg.im().to_double()) < 1e-70);
  }
}

TEST_CASE("gamma in the complex plane") {
  const prec_t bits = 256;
  const BigFloat pi = BigFloat::pi(bits);
  BigComplex h = gamma(BigComplex(Rational(1, 2), bits));
  CHECK(relative_difference(h * h, BigComplex(pi)).to_double() < 1e-70);
  Gen g(71);
  for (int i = 0; i < 20; ++i) {
    BigComplex z(g.rational(), g.rational(), bits);
    if (z.is_nonpositive_integer()) continue;
    // Gamma(z+1) = z Gamma(z)
    CHECK(relative_difference(gamma(z + Rational(1)), z * gamma(z)).to_double() < 1e-65);
    // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
    BigFloat t = z.im();
    BigComplex w = gamma(BigComplex(BigFloat(Rational(1, 2), bits), t));
    BigFloat lhs = abs(w) * abs(w);
    BigFloat e = exp(pi * t);
    BigFloat rhs = pi * BigFloat(2L, bits) / (e + BigFloat(1L, bits) / e);
    CHECK((abs(lhs - rhs) / rhs).to_double() < 1e-65);
  }
  CHECK(gamma_ratio(BigComplex(Rational(3), bits), BigComplex(Rational(-2), bits)).is_zero());
  CHECK_THROWS_AS(log_gamma(BigComplex(Rational(0), bits)), PoleError);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(7) == 0);
}

TEST_CASE("complex literals") {
  CHECK(parse_complex_literal("3/2+1/4i") == std::pair<Rational, Rational>{Rational(3, 2), Rational(1, 4)});
  CHECK(parse_complex_literal("-2i") == std::pair<Rational, Rational>{Rational(0), Rational(-2)});
  CHECK(parse_complex_literal("0.5-1.25i") == std::pair<Rational, Rational>{Rational(1, 2), Rational(-5, 4)});
  CHECK(parse_complex_literal("7") == std::pair<Rational, Rational>{Rational(7), Rational(0)});
  CHECK_THROWS(parse_complex_literal("1+"));
  CHECK_THROWS(parse_complex_literal("x"));
}

TEST_CASE("roots of the n = 4 second-kind factor") {
  ZeroReport zr = find_roots(p_poly_U(4), 256);
  REQUIRE(zr.roots.size() == 2);
  const BigFloat im = BigFloat(2L, 256) / sqrt(BigFloat(5L, 256));
  for (const auto& r : zr.roots) {
    CHECK(abs(r.re() - BigFloat(Rational(1, 2), 256)).to_double() < 1e-25);
    CHECK(abs(abs(r.im()) - im).to_double() < 1e-25);
  }
  CHECK(zr.conjugate_pairing_ok);
  CHECK(zr.residual_bound.to_double() <= std::ldexp(1.0, -240));
  CHECK(critical_line_report(zr, 1e-20).verdict == LineVerdict::critical);
}

TEST_CASE("roots of constructed polynomials") {
  Gen g(73);
  for (int trial = 0; trial < 25; ++trial) {
    RatPoly p = RatPoly::constant(g.positive_rational(9, 9));
    std::vector<Rational> reals;
    unsigned nreal = static_cast<unsigned>(g.range(0, 3)), npairs = static_cast<unsigned>(g.range(0, 4));
    for (unsigned i = 0; i < nreal; ++i) {
      Rational r = g.rational(30, 6);
      reals.push_back(r);
      p *= RatPoly::linear(-r, 1);
    }
    for (unsigned i = 0; i < npairs; ++i) {
      // (s - 1/2)^2 + y^2
      Rational y = g.positive_rational(20, 7);
      p *= RatPoly({Rational(1, 4) + y * y, Rational(-1), Rational(1)});
    }
    if (p.degree() == 0) continue;
    ZeroReport zr = find_roots(p, 192);
    CHECK(zr.roots.size() == p.degree());
    std::sort(reals.begin(), reals.end());
    CHECK(zr.real_roots == reals);
    CHECK(zr.conjugate_pairing_ok);
    CHECK(zr.residual_bound.to_double() <= std::ldexp(1.0, -176));
    CriticalLineReport rep = critical_line_report(zr, 1e-20);
    bool all_half = std::all_of(reals.begin(), reals.end(), [](const Rational& r) { return r == Rational(1, 2); });
    if (npairs > 0 && all_half) CHECK(rep.verdict == LineVerdict::critical);
    if (npairs == 0) CHECK(rep.verdict == LineVerdict::real_line);
  }
}

TEST_CASE("first-kind zeros are real integers") {
  ZeroReport zr = find_roots(mellin_T_closed(5).poly, 256);
  CHECK(zr.real_roots == std::vector<Rational>{2, 24});
  CHECK(critical_line_report(zr, 1e-20).verdict == LineVerdict::real_line);
  CHECK(critical_line_report(find_roots(RatPoly::constant(3), 256), 1e-20).vacuous);
}

TEST_CASE("tanh-sinh with endpoint singularities") {
  auto f = [](double dl, double) { return std::complex<double>(1 / std::sqrt(dl), 0); };
  CHECK(std::abs(tanh_sinh(f, 1.0, 1e-12) - 2.0) < 1e-11);
  auto g = [](double, double dr) { return std::complex<double>(std::pow(dr, -0.75), 0); };
  CHECK(std::abs(tanh_sinh(g, 1.0, 1e-12) - 4.0) < 1e-10);
  auto h = [](double dl, double) { return std::complex<double>(std::sin(dl), 0); };
  CHECK(std::abs(tanh_sinh(h, M_PI, 1e-12) - 2.0) < 1e-12);
}

TEST_CASE("quadrature oracle against exact Beta sums") {
  const prec_t bits = 256;
  for (unsigned n = 0; n <= 8; ++n) {
    const long s = n % 2 ? 3 : 2;
    BigComplex sc(Rational(s), bits);
    Rational u = testsupport::weighted_moment(testsupport::explicit_U(n), s, Rational(-1, 4));
    Rational t = testsupport::weighted_moment(testsupport::explicit_T(n), s, Rational(1, 2));
    Rational c = testsupport::weighted_moment(testsupport::explicit_C(n, Rational(7, 3)), s, Rational(7, 6) - Rational(3, 4));
    CHECK(relative_difference(mellin_quadrature(Family::U, n, std::nullopt, sc, bits), BigComplex(u, bits)).to_double() < 1e-10);
    CHECK(relative_difference(mellin_quadrature(Family::T, n, std::nullopt, sc, bits), BigComplex(t, bits)).to_double() < 1e-10);
    CHECK(relative_difference(mellin_quadrature(Family::Gegenbauer, n, Rational(7, 3), sc, bits), BigComplex(c, bits))
              .to_double() < 1e-10);
  }
  CHECK_THROWS_AS(mellin_quadrature(Family::U, 2, std::nullopt, BigComplex(Rational(-1, 2), bits), bits), PreconditionError);
  CHECK_THROWS_AS(mellin_quadrature(Family::Gegenbauer, 2, std::nullopt, BigComplex(Rational(2), bits), bits),
                  PreconditionError);
}

TEST_CASE("closed-form evaluation off the real axis") {
  const prec_t bits = 256;
  BigComplex s(Rational(1), Rational(1), bits);
  for (unsigned n = 0; n <= 6; ++n) {
    BigComplex q = mellin_quadrature(Family::U, n, std::nullopt, s, bits);
    CHECK(relative_difference(q, mellin_eval(mellin_U_closed(n), s, bits)).to_double() < 1e-9);
  }
  CHECK_THROWS_AS(mellin_eval(mellin_U_closed(0), BigComplex(Rational(0), bits), bits), PoleError);
}
