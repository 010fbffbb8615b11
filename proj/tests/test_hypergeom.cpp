#include <doctest.h>

#include <mpfr.h>

#include <cmath>

#include "chebmellin/errors.hpp"
#include "chebmellin/formal_series.hpp"
#include "chebmellin/hypergeom.hpp"
#include "chebmellin/numerics.hpp"
#include "test_support.hpp"

using namespace chebmellin;
using testsupport::Gen;

namespace {

BigFloat mpfr_lgamma_of(const Rational& x, prec_t bits) {
  BigFloat v(x, bits), out(0L, bits);
  mpfr_lngamma(out.get(), v.get(), MPFR_RNDN);
  return out;
}

// Gauss: 2F1(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b)), positive arguments.
BigFloat gauss_oracle(const Rational& a, const Rational& b, const Rational& c, prec_t bits) {
  return exp(mpfr_lgamma_of(c, bits) + mpfr_lgamma_of(c - a - b, bits) - mpfr_lgamma_of(c - a, bits) -
             mpfr_lgamma_of(c - b, bits));
}

}  // namespace

TEST_CASE("terminating sums") {
  CHECK(pfq_terminating_exact({{Rational(-1), 2, 3}, {5, 7}, Rational(1)}) == Rational(29, 35));
  CHECK(pfq_terminating_exact({{Rational(-2), 1}, {3}, Rational(1)}) == Rational(1, 2));
  CHECK(pfq_terminating_exact({{Rational(0), Rational(7, 3)}, {Rational(1, 5)}, Rational(9)}) == 1);
  CHECK_THROWS_AS(pfq_terminating_exact({{Rational(-3), 1}, {Rational(-1)}, Rational(1)}), PoleError);
  CHECK(termination_index({{Rational(5), Rational(-4), Rational(-2)}, {}, Rational(1)}) == 2u);
}

TEST_CASE("chu-vandermonde") {
  CHECK(chu_vandermonde(0, 5, 7) == 1);
  CHECK(chu_vandermonde(2, 1, 3) == Rational(1, 2));
  CHECK(chu_vandermonde(3, Rational(2, 3), Rational(2, 3)) == 0);
  Gen g(17);
  for (int i = 0; i < 200; ++i) {
    unsigned n = static_cast<unsigned>(g.range(0, 10));
    Rational b = g.rational(), c = g.rational();
    try {
      Rational lhs = pfq_terminating_exact({{-Rational(n), b}, {c}, Rational(1)});
      Rational rhs = chu_vandermonde(n, b, c);
      CHECK(rhs == lhs);
    } catch (const PoleError&) {
    }
  }
}

TEST_CASE("numeric series") {
  const prec_t bits = 256;
  CHECK(relative_difference(pfq_numeric(RationalHyper{{}, {Rational(1)}, Rational(0)}, bits), BigComplex(Rational(1), bits))
            .to_double() == 0.0);
  // 2F1(1,1;2;1/2) = 2 ln 2
  BigComplex v = pfq_numeric(RationalHyper{{Rational(1), Rational(1)}, {Rational(2)}, Rational(1, 2)}, bits);
  BigFloat ln2 = log(BigFloat(2L, bits)) * 2L;
  CHECK(relative_difference(v, BigComplex(ln2)).to_double() < 1e-70);
  // terminating input agrees with the exact sum
  RationalHyper h{{Rational(-6), Rational(3, 7), Rational(-5, 2)}, {Rational(1, 3), Rational(9, 4)}, Rational(1)};
  CHECK(relative_difference(pfq_numeric(h, bits), BigComplex(pfq_terminating_exact(h), bits)).to_double() < 1e-70);
  CHECK_THROWS_AS(pfq_numeric(RationalHyper{{Rational(1), Rational(1)}, {Rational(2)}, Rational(2)}, bits), DivergenceError);
  // two precisions agree to the coarser contract
  RationalHyper e{{Rational(1, 3), Rational(2, 5)}, {Rational(7, 4)}, Rational(-3, 5)};
  BigComplex lo = pfq_numeric(e, 128), hi = pfq_numeric(e, 256);
  CHECK(relative_difference(lo.with_precision(256), hi).to_double() < std::ldexp(1.0, -120));
}

TEST_CASE("unit argument against Gauss summation") {
  const prec_t bits = 192;
  for (auto [a, b, c] : std::vector<std::tuple<Rational, Rational, Rational>>{
           {Rational(1, 3), Rational(1, 4), Rational(2)},
           {Rational(3, 2), Rational(-2, 3), Rational(5, 2)},
           {Rational(1, 5), Rational(1, 7), Rational(3, 4)}}) {
    ComplexHyper h = to_complex(RationalHyper{{a, b}, {c}, Rational(1)}, bits);
    UnitArgumentSum s = pfq_unit_argument(h, bits, 1e-30);
    CHECK(relative_difference(s.value, BigComplex(gauss_oracle(a, b, c, bits))).to_double() < 1e-25);
  }
}

TEST_CASE("thomae transform") {
  ThomaeResult t = thomae_transform(1, 1, 1, 2, 2);
  CHECK(t.w == 1);
  // (-3, 1/2, 2; 3, 4): both sides through finite sums.
  ThomaeCheck c = thomae_check(3, Rational(1, 2), 2, 3, 4);
  CHECK(c.applicable);
  CHECK(c.ok);
  CHECK(thomae_check(0, Rational(1, 2), 2, 3, 4).lhs == 1);
}

TEST_CASE("appendix transforms") {
  auto e = appendix_transforms(1, 2, 3, 5, 7);
  REQUIRE(e[3].applicable);
  CHECK(e[3].result->prefactor * pfq_terminating_exact(e[3].result->params) == Rational(29, 35));
  for (const auto& x : appendix_transforms(0, Rational(1, 3), 2, Rational(5, 7), 4)) {
    REQUIRE(x.applicable);
    CHECK(x.result->prefactor == 1);
    CHECK(pfq_terminating_exact(x.result->params) == 1);
  }
  // Property: every applicable entry reproduces the original sum.
  Gen g(23);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    unsigned n = static_cast<unsigned>(g.range(0, 8));
    Rational a = g.rational(), b = g.rational(), c = g.rational(), d = g.rational();
    Rational lhs;
    try {
      lhs = pfq_terminating_exact({{-Rational(n), a, b}, {c, d}, Rational(1)});
    } catch (const PoleError&) {
      continue;
    }
    for (const auto& x : appendix_transforms(n, a, b, c, d)) {
      if (!x.applicable) continue;
      ++checked;
      INFO("n=", n, " a=", a.str(), " b=", b.str(), " c=", c.str(), " d=", d.str(), " entry ", x.index);
      CHECK(x.result->prefactor * pfq_terminating_exact(x.result->params) == lhs);
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("quadratic-argument coefficient formulas") {
  for (auto v : {QuadraticVariant::single, QuadraticVariant::twice})
    CHECK(lemma5_coefficient(Rational(2, 3), Rational(1, 5), Rational(7, 4), 0, v) == 1);
  // a = 1, b = s/2 at s = 2, c = 7/4, m = 2
  RationalSeries s = series_compose_rational({Rational(1), {Rational(1), Rational(1)}, {Rational(7, 4)}}, 4);
  CHECK(quadratic_coefficient_3f2(1, Rational(7, 4), 2, QuadraticVariant::single) == s.coeff(4));
  CHECK(lemma5_coefficient(1, 1, Rational(7, 4), 2, QuadraticVariant::single) == s.coeff(4));
  Gen g(29);
  int done = 0;
  while (done < 10) {
    Rational a = g.rational(), b = g.rational(), c = g.rational();
    if (c.is_nonpositive_integer()) continue;
    try {
      for (auto v : {QuadraticVariant::single, QuadraticVariant::twice})
        for (unsigned m = 0; m <= 6; ++m) (void)lemma5_coefficient(a, b, c, m, v);
    } catch (const PoleError&) {
      continue;
    }
    for (auto v : {QuadraticVariant::single, QuadraticVariant::twice}) {
      RationalSeries ser = series_compose_rational({v == QuadraticVariant::single ? Rational(1) : Rational(2), {a, b}, {c}}, 12);
      for (unsigned m = 0; m <= 6; ++m) {
        CHECK(lemma5_coefficient(a, b, c, m, v) == ser.coeff(2 * m));
        if (m < 6) CHECK(ser.coeff(2 * m + 1) == 0);
      }
    }
    ++done;
  }
}
