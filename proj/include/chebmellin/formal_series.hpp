#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "chebmellin/errors.hpp"
#include "chebmellin/rational.hpp"

namespace chebmellin {

// Truncated power series c_0 + c_1 t + ... + c_order t^order. Coefficients past
// the truncation order are unknown, so coeff() refuses them.
template <class T>
class FormalSeries {
 public:
  FormalSeries(std::vector<T> coeffs, unsigned order) : c_(std::move(coeffs)), order_(order) {
    c_.resize(order_ + 1, T(0));
  }
  static FormalSeries constant(const T& v, unsigned order) {
    std::vector<T> c(order + 1, T(0));
    c[0] = v;
    return FormalSeries(std::move(c), order);
  }
  // The series t (truncated at order).
  static FormalSeries variable(unsigned order) {
    std::vector<T> c(order + 1, T(0));
    if (order >= 1) c[1] = T(1);
    return FormalSeries(std::move(c), order);
  }

  unsigned order() const { return order_; }
  const T& coeff(unsigned k) const {
    if (k > order_)
      throw PreconditionError("coefficient " + std::to_string(k) + " beyond truncation order " +
                              std::to_string(order_));
    return c_[k];
  }

  FormalSeries truncated(unsigned order) const {
    unsigned o = std::min(order, order_);
    return FormalSeries(std::vector<T>(c_.begin(), c_.begin() + o + 1), o);
  }

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    unsigned o = std::min(a.order_, b.order_);
    std::vector<T> r(o + 1, T(0));
    for (unsigned k = 0; k <= o; ++k) r[k] = a.c_[k] + b.c_[k];
    return FormalSeries(std::move(r), o);
  }
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
    unsigned o = std::min(a.order_, b.order_);
    std::vector<T> r(o + 1, T(0));
    for (unsigned k = 0; k <= o; ++k) r[k] = a.c_[k] - b.c_[k];
    return FormalSeries(std::move(r), o);
  }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    unsigned o = std::min(a.order_, b.order_);
    std::vector<T> r(o + 1, T(0));
    for (unsigned i = 0; i <= o; ++i) {
      if (a.c_[i] == T(0)) continue;
      for (unsigned j = 0; i + j <= o; ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return FormalSeries(std::move(r), o);
  }
  friend FormalSeries operator*(const T& s, FormalSeries a) {
    for (auto& v : a.c_) v = s * v;
    return a;
  }

  // this(inner(t)); requires inner to have zero constant term.
  FormalSeries compose(const FormalSeries& inner) const {
    if (!(inner.c_[0] == T(0))) throw PreconditionError("compose: inner series must vanish at 0");
    unsigned o = std::min(order_, inner.order_);
    FormalSeries acc = constant(T(0), o);
    FormalSeries power = constant(T(1), o);
    for (unsigned k = 0; k <= o; ++k) {
      acc = acc + c_[k] * power;
      power = power * inner.truncated(o);
    }
    return acc;
  }

  // Multiply by t^k; the truncation order rises by k.
  FormalSeries shifted(unsigned k) const {
    std::vector<T> r(order_ + k + 1, T(0));
    for (unsigned i = 0; i <= order_; ++i) r[i + k] = c_[i];
    return FormalSeries(std::move(r), order_ + k);
  }

 private:
  std::vector<T> c_;
  unsigned order_;
};

using RationalSeries = FormalSeries<Rational>;

// Describes (1+t^2)^{-e} * pFq(numerator; denominator; 4t^2/(1+t^2)^2).
// The quadratic-argument setting is e in {1,2} with a 2F1; the exponent may be any
// rational and the parameter lists any length (used by the Gegenbauer
// generating function).
struct QuadraticArgumentSeries {
  Rational exponent;
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;
};

// Exact Taylor coefficients in t through `order`, by formal substitution.
RationalSeries series_compose_rational(const QuadraticArgumentSeries& f, unsigned order);

// (1 + t^2)^{-e} through `order`.
RationalSeries one_plus_t2_power(const Rational& e, unsigned order);

}  // namespace chebmellin
