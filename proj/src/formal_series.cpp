#include "chebmellin/formal_series.hpp"

namespace chebmellin {

RationalSeries one_plus_t2_power(const Rational& e, unsigned order) {
  // (1+u)^{-e} = sum_k (e)_k (-u)^k / k!, with u = t^2.
  std::vector<Rational> c(order + 1, Rational(0));
  Rational term(1);
  for (unsigned k = 0; 2 * k <= order; ++k) {
    c[2 * k] = term;
    term = term * (e + Rational(k)) * Rational(-1) / Rational(k + 1);
  }
  return RationalSeries(std::move(c), order);
}

RationalSeries series_compose_rational(const QuadraticArgumentSeries& f, unsigned order) {
  for (const auto& b : f.denominator) {
    if (b.is_nonpositive_integer())
      throw PoleError("series_compose_rational: denominator parameter " + b.str() +
                      " is a non-positive integer");
  }
  // z = 4 t^2 (1+t^2)^{-2}
  RationalSeries z = RationalSeries(std::vector<Rational>{Rational(0), Rational(0), Rational(4)}, order) *
                     one_plus_t2_power(Rational(2), order);
  RationalSeries sum = RationalSeries::constant(Rational(0), order);
  RationalSeries zpow = RationalSeries::constant(Rational(1), order);
  Rational coef(1);
  // z^j starts at t^{2j}, so j <= order/2 suffices.
  for (unsigned j = 0; 2 * j <= order; ++j) {
    sum = sum + coef * zpow;
    for (const auto& a : f.numerator) coef *= a + Rational(j);
    if (coef.is_zero()) break;
    for (const auto& b : f.denominator) coef /= b + Rational(j);
    coef /= Rational(j + 1);
    zpow = zpow * z;
  }
  return sum * one_plus_t2_power(f.exponent, order);
}

}  // namespace chebmellin
