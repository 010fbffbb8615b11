#include "chebmellin/mellin_closed_form.hpp"

#include <sstream>

#include "chebmellin/errors.hpp"
#include "chebmellin/numerics.hpp"

namespace chebmellin {

const char* const_class_name(ConstClass c) {
  switch (c) {
    case ConstClass::gamma_three_quarters: return "Gamma(3/4)";
    case ConstClass::sqrt_pi: return "sqrt(pi)";
    case ConstClass::gamma_gegenbauer: return "Gamma(lambda/2+1/4)";
  }
  return "?";
}

Rational const_class_argument(const MellinClosedForm& f) {
  switch (f.const_class) {
    case ConstClass::gamma_three_quarters: return Rational(3, 4);
    case ConstClass::sqrt_pi: return Rational(1, 2);
    case ConstClass::gamma_gegenbauer:
      if (!f.lambda) throw PreconditionError("Gegenbauer constant without lambda");
      return *f.lambda / 2 + Rational(1, 4);
  }
  return Rational(1);
}

std::string MellinClosedForm::describe() const {
  std::ostringstream os;
  os << multiplier << " * " << const_class_name(const_class) << " * (" << poly.str() << ") * Gamma(s/2 + "
     << gamma_num_offset << ") / Gamma(s/2 + " << gamma_den_offset << ")";
  return os.str();
}

GammaRatio closed_form_gamma(const MellinClosedForm& f, const Rational& s) {
  GammaRatio g;
  g.coefficient = f.multiplier * f.poly(s);
  g.numerator = {const_class_argument(f), s / 2 + f.gamma_num_offset};
  g.denominator = {s / 2 + f.gamma_den_offset};
  return g;
}

std::optional<Rational> mellin_eval_exact(const MellinClosedForm& f, const Rational& s) {
  GammaRatio g = closed_form_gamma(f, s);
  if (g.coefficient.is_zero()) return Rational(0);
  return try_exact(g);
}

std::optional<Rational> mellin_ratio_exact(const MellinClosedForm& f, const Rational& s, const MellinClosedForm& g,
                                           const Rational& t) {
  GammaRatio num = closed_form_gamma(f, s);
  GammaRatio den = closed_form_gamma(g, t);
  if (den.coefficient.is_zero()) throw PoleError("ratio against a vanishing transform");
  if (num.coefficient.is_zero()) return Rational(0);
  return try_exact(num / den);
}

BigComplex mellin_eval(const MellinClosedForm& f, const BigComplex& s, prec_t bits) {
  const prec_t wp = bits + 16;
  BigComplex sw = s.with_precision(wp);
  BigComplex half_s = sw * BigFloat(Rational(1, 2), wp);
  BigComplex a = half_s + BigComplex(f.gamma_num_offset, wp);
  BigComplex b = half_s + BigComplex(f.gamma_den_offset, wp);
  BigComplex p = evaluate(f.poly, sw);
  BigComplex k = gamma(BigComplex(const_class_argument(f), wp));
  BigComplex v = p * k * BigFloat(f.multiplier, wp);
  if (p.re().is_zero() && p.im().is_zero()) {
    if (a.is_nonpositive_integer()) throw PoleError("0 * pole in closed form");
    return BigComplex(Rational(0), bits);
  }
  return (v * gamma_ratio(a, b)).with_precision(bits);
}

}  // namespace chebmellin
