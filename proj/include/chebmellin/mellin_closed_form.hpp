#pragma once

#include <optional>
#include <string>

#include "chebmellin/bigfloat.hpp"
#include "chebmellin/gamma_ratio.hpp"
#include "chebmellin/quadrature.hpp"
#include "chebmellin/rational.hpp"
#include "chebmellin/ratpoly.hpp"

namespace chebmellin {

// The irrational constant carried outside the rational polynomial.
enum class ConstClass {
  gamma_three_quarters,  // Gamma(3/4)
  sqrt_pi,               // sqrt(pi) = Gamma(1/2)
  gamma_gegenbauer,      // Gamma(lambda/2 + 1/4)
};
const char* const_class_name(ConstClass c);

// M(s) = multiplier * K * poly(s) * Gamma(s/2 + num_offset) / Gamma(s/2 + den_offset)
// with K the constant named by const_class.
struct MellinClosedForm {
  Family family = Family::U;
  unsigned n = 0;
  std::optional<Rational> lambda;  // Gegenbauer / Beta (as lambda = 3/2 - 2 beta)
  std::optional<Rational> beta;    // Beta only
  int epsilon = 0;
  RatPoly poly;
  ConstClass const_class = ConstClass::gamma_three_quarters;
  Rational multiplier{1};
  Rational gamma_num_offset;
  Rational gamma_den_offset;

  std::string describe() const;
};

// The constant K as a single Gamma argument.
Rational const_class_argument(const MellinClosedForm& f);

// Full closed form at rational s as a product of Gamma values. Exact when the
// constants cancel against another GammaRatio (see try_exact).
GammaRatio closed_form_gamma(const MellinClosedForm& f, const Rational& s);

// Exact value when K and the Gamma ratio telescope to a rational number.
std::optional<Rational> mellin_eval_exact(const MellinClosedForm& f, const Rational& s);

// f(s) / g(t) exactly, when the quotient telescopes.
std::optional<Rational> mellin_ratio_exact(const MellinClosedForm& f, const Rational& s, const MellinClosedForm& g,
                                           const Rational& t);

// Numeric value; throws PoleError at a numerator Gamma pole.
BigComplex mellin_eval(const MellinClosedForm& f, const BigComplex& s, prec_t precision_bits = 256);

}  // namespace chebmellin
