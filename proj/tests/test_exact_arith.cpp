#include <doctest.h>

#include "chebmellin/errors.hpp"
#include "chebmellin/formal_series.hpp"
#include "chebmellin/gamma_ratio.hpp"
#include "chebmellin/rational.hpp"
#include "chebmellin/ratpoly.hpp"
#include "test_support.hpp"

using namespace chebmellin;
using testsupport::Gen;

TEST_CASE("rational serialization") {
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(6, -16).str() == "-3/8");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(10, 5).str() == "2");
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("1e-3") == Rational(1, 1000));
  CHECK(Rational::parse("14/-21") == Rational(-2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), PreconditionError);
  CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("rational field properties") {
  Gen g(11);
  for (int i = 0; i < 500; ++i) {
    Rational a = g.rational(), b = g.rational(), c = g.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.str()) == a);
    CHECK(a.floor() <= a);
    CHECK(a - a.floor() < Rational(1));
  }
}

TEST_CASE("pochhammer, factorial, binomial") {
  CHECK(pochhammer(Rational(1, 2), 0) == 1);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-2), 4) == 0);
  CHECK(factorial(6) == 720);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(4, 7) == 0);
  // (a)_{m+k} = (a)_m (a+m)_k
  Gen g(5);
  for (int i = 0; i < 100; ++i) {
    Rational a = g.rational();
    unsigned m = static_cast<unsigned>(g.range(0, 6)), k = static_cast<unsigned>(g.range(0, 6));
    CHECK(pochhammer(a, m + k) == pochhammer(a, m) * pochhammer(a + Rational(m), k));
  }
}

TEST_CASE("polynomial arithmetic") {
  RatPoly p({Rational(-1), Rational(0), Rational(2)});  // 2s^2 - 1
  RatPoly q = RatPoly::linear(Rational(1), Rational(1));
  CHECK((p * q).coeffs() == std::vector<Rational>{-1, -1, 2, 2});
  CHECK(p(Rational(1, 2)) == Rational(-1, 2));
  CHECK(p.derivative() == RatPoly({Rational(0), Rational(4)}));
  CHECK(poly_reflect(q) == RatPoly({Rational(2), Rational(-1)}));
  CHECK(poly_shift(p, 1) == RatPoly({Rational(1), Rational(4), Rational(2)}));
  CHECK((p - p).is_zero());
  CHECK_THROWS_AS(p.divmod(RatPoly()), PoleError);
}

TEST_CASE("polynomial properties") {
  Gen g(7);
  auto rand_poly = [&](unsigned deg) {
    std::vector<Rational> c;
    for (unsigned k = 0; k <= deg; ++k) c.push_back(g.rational(9, 5));
    if (c.back().is_zero()) c.back() = 1;
    return RatPoly(c);
  };
  for (int i = 0; i < 80; ++i) {
    RatPoly a = rand_poly(static_cast<unsigned>(g.range(0, 7))), b = rand_poly(static_cast<unsigned>(g.range(0, 4)));
    auto [quo, rem] = a.divmod(b);
    CHECK(quo * b + rem == a);
    CHECK((rem.is_zero() || rem.degree() < b.degree() || b.degree() == 0));
    CHECK(poly_reflect(poly_reflect(a)) == a);
    Rational x = g.rational();
    CHECK(a.compose(b)(x) == a(b(x)));
    CHECK((a * b)(x) == a(x) * b(x));
    CHECK(poly_shift(a, x)(Rational(1, 3)) == a(Rational(1, 3) + x));
  }
}

TEST_CASE("formal series") {
  // 1/(1-t) = sum t^k
  using S = RationalSeries;
  S one_minus_t({Rational(1), Rational(-1)}, 8);
  S geo(std::vector<Rational>(9, Rational(1)), 8);
  S prod = one_minus_t * geo;
  CHECK(prod.coeff(0) == 1);
  for (unsigned k = 1; k <= 8; ++k) CHECK(prod.coeff(k) == 0);
  CHECK_THROWS_AS(geo.coeff(9), PreconditionError);

  // (1+t^2)^{-1} = sum (-1)^k t^{2k}; (1+t^2)^{-2} = sum (-1)^k (k+1) t^{2k}
  S inv = one_plus_t2_power(1, 10), inv2 = one_plus_t2_power(2, 10);
  for (unsigned k = 0; k <= 5; ++k) {
    CHECK(inv.coeff(2 * k) == Rational(k % 2 ? -1 : 1));
    CHECK(inv2.coeff(2 * k) == Rational(k % 2 ? -static_cast<long>(k + 1) : static_cast<long>(k + 1)));
    if (k < 5) CHECK(inv.coeff(2 * k + 1) == 0);
  }
  // (1+t^2)^{1/2} squared is 1 + t^2.
  S half = one_plus_t2_power(Rational(-1, 2), 10);
  S sq = half * half;
  CHECK(sq.coeff(0) == 1);
  CHECK(sq.coeff(2) == 1);
  for (unsigned k = 3; k <= 10; ++k) CHECK(sq.coeff(k) == 0);
}

TEST_CASE("quadratic-argument substitution") {
  // 2F1(1, 1/2; 1/2; z) = 1/(1-z); with z = 4t^2/(1+t^2)^2 and e = 1:
  // (1+t^2)^{-1} (1+t^2)^2 / (1-t^2)^2 = (1+t^2)/(1-t^2)^2.
  RationalSeries f = series_compose_rational({Rational(1), {Rational(1), Rational(1, 2)}, {Rational(1, 2)}}, 12);
  RationalSeries oracle({Rational(1), 0, Rational(1)}, 12);
  // 1/(1-t^2)^2 = sum (k+1) t^{2k}
  std::vector<Rational> c(13, Rational(0));
  for (unsigned k = 0; 2 * k <= 12; ++k) c[2 * k] = Rational(k + 1);
  RationalSeries expect = oracle * RationalSeries(c, 12);
  for (unsigned k = 0; k <= 12; ++k) CHECK(f.coeff(k) == expect.coeff(k));
}

TEST_CASE("gamma ratios") {
  CHECK(try_exact({Rational(1), {Rational(5, 2)}, {Rational(1, 2)}}) == Rational(3, 4));
  CHECK(try_exact({Rational(2), {Rational(4)}, {}}) == Rational(12));
  CHECK_FALSE(try_exact({Rational(1), {Rational(3, 4)}, {}}).has_value());
  CHECK(try_exact({Rational(1), {Rational(3, 4)}, {Rational(7, 4)}}) == Rational(4, 3));
  // 1/Gamma at a pole is zero.
  CHECK(try_exact({Rational(1), {Rational(3)}, {Rational(-2)}}) == Rational(0));
  CHECK_THROWS_AS(try_exact({Rational(1), {Rational(-1)}, {Rational(1, 3)}}), PoleError);
  // Gamma(z+k)/Gamma(z) = (z)_k
  Gen g(3);
  for (int i = 0; i < 50; ++i) {
    Rational z = g.positive_rational();
    unsigned k = static_cast<unsigned>(g.range(0, 8));
    CHECK(try_exact({Rational(1), {z + Rational(k)}, {z}}) == pochhammer(z, k));
  }
}
