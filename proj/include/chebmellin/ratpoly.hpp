#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "chebmellin/rational.hpp"

namespace chebmellin {

enum class Variable { s, x, t, u };

const char* variable_name(Variable v);

// Univariate polynomial with ascending Rational coefficients. The zero
// polynomial is stored as the single coefficient 0.
class RatPoly {
 public:
  RatPoly() : coeffs_{Rational(0)} {}
  explicit RatPoly(std::vector<Rational> coeffs, Variable var = Variable::s);
  RatPoly(std::initializer_list<Rational> coeffs, Variable var = Variable::s)
      : RatPoly(std::vector<Rational>(coeffs), var) {}

  static RatPoly constant(const Rational& c, Variable var = Variable::s) { return RatPoly({c}, var); }
  static RatPoly monomial(unsigned k, const Rational& c = Rational(1), Variable var = Variable::s);
  // c0 + c1 * var
  static RatPoly linear(const Rational& c0, const Rational& c1, Variable var = Variable::s) {
    return RatPoly({c0, c1}, var);
  }

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  Variable variable() const { return var_; }
  RatPoly with_variable(Variable v) const { return RatPoly(coeffs_, v); }

  Rational operator()(const Rational& x) const;
  RatPoly derivative() const;
  // this(inner(var))
  RatPoly compose(const RatPoly& inner) const;
  // Quotient and remainder; throws PoleError on a zero divisor.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  RatPoly operator-() const { return *this * Rational(-1); }

  // Coefficient equality; the variable tag is not compared.
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  Variable var_ = Variable::s;
};

// q(s) = p(s + a)
RatPoly poly_shift(const RatPoly& p, const Rational& a);
// q(s) = p(1 - s)
RatPoly poly_reflect(const RatPoly& p);
// p(-s)
RatPoly poly_negate_argument(const RatPoly& p);

}  // namespace chebmellin
