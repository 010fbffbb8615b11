#include "chebmellin/cheb_mellin.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "chebmellin/errors.hpp"
#include "chebmellin/formal_series.hpp"
#include "chebmellin/hypergeom.hpp"
#include "chebmellin/numerics.hpp"

namespace chebmellin {

namespace {

RatPoly x_poly(std::vector<Rational> c) { return RatPoly(std::move(c), Variable::x); }

// Mixed recursion shared by both kinds: q_n = a_n(s) q_{n-1}(s+1) - (c_n + s/2) q_{n-2}(s)
// with a_n = s (n even) or 2 (n odd).
std::vector<RatPoly> mixed_recursion(unsigned n, const Rational& q0, const Rational& q1,
                                     const std::function<Rational(unsigned)>& c) {
  std::vector<RatPoly> q{RatPoly::constant(q0)};
  if (n >= 1) q.push_back(RatPoly::constant(q1));
  for (unsigned m = 2; m <= n; ++m) {
    RatPoly a = (m % 2 == 0) ? RatPoly::linear(0, 1) : RatPoly::constant(2);
    q.push_back(a * poly_shift(q[m - 1], 1) - RatPoly::linear(c(m), Rational(1, 2)) * q[m - 2]);
  }
  return q;
}

}  // namespace

RatPoly chebyshev_poly(ChebKind kind, unsigned n) {
  RatPoly a = x_poly({1});
  if (n == 0) return a;
  RatPoly b = kind == ChebKind::T ? x_poly({0, 1}) : x_poly({0, 2});
  const RatPoly two_x = x_poly({0, 2});
  for (unsigned k = 1; k < n; ++k) {
    RatPoly c = two_x * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

RatPoly chebyshev_U_signed(long n) {
  if (n >= 0) return chebyshev_poly(ChebKind::U, static_cast<unsigned>(n));
  if (n == -1) return x_poly({0});
  return -chebyshev_poly(ChebKind::U, static_cast<unsigned>(-n - 2));
}

std::vector<RatPoly> p_poly_U_table(unsigned n_max) {
  return mixed_recursion(n_max, Rational(1, 2), Rational(1), [](unsigned m) { return Rational(2 * m - 1, 4); });
}

RatPoly p_poly_U(unsigned n) { return p_poly_U_table(n).back(); }

RatPoly p_poly_T_raw(unsigned n) {
  return mixed_recursion(n, Rational(1, 4), Rational(1, 4), [](unsigned m) { return Rational(m + 1, 2); }).back();
}

MellinClosedForm mellin_U_closed(unsigned n) { return mellin_U_closed(n, p_poly_U(n)); }

MellinClosedForm mellin_U_closed(unsigned n, RatPoly p) {
  MellinClosedForm f;
  f.family = Family::U;
  f.n = n;
  f.epsilon = static_cast<int>(n % 2);
  f.poly = std::move(p);
  f.const_class = ConstClass::gamma_three_quarters;
  f.gamma_num_offset = Rational(f.epsilon, 2);
  f.gamma_den_offset = Rational(2 * n + 3, 4);
  return f;
}

MellinClosedForm mellin_T_closed(unsigned n) {
  MellinClosedForm f;
  f.family = Family::T;
  f.n = n;
  f.epsilon = static_cast<int>(n % 2);
  RatPoly raw = p_poly_T_raw(n);
  f.multiplier = raw.leading();
  f.poly = raw * (Rational(1) / raw.leading());
  f.const_class = ConstClass::sqrt_pi;
  f.gamma_num_offset = Rational(f.epsilon, 2);
  f.gamma_den_offset = Rational(n + 3, 2);
  return f;
}

MellinClosedForm mellin_T_printed(unsigned n) {
  if (n < 2) throw PreconditionError("printed first-kind form needs n >= 2");
  MellinClosedForm f = mellin_T_closed(n);
  RatPoly p = RatPoly::constant(1);
  for (long r = static_cast<long>(n) - 3; r >= 1; r -= 2) p *= RatPoly::linear(-r, 1);
  p *= RatPoly::linear(-static_cast<long>(n * n - 1), 1);
  f.poly = p;
  f.multiplier = Rational(1) / (Rational(4) * Rational(2).pow(n));
  return f;
}

Rational mellin_ratio_prop4(unsigned n, const Rational& s) {
  const unsigned k = n / 2;
  const Rational sign = (k % 2) ? Rational(-1) : Rational(1);
  if (n % 2 == 0) {
    RationalHyper h{{Rational(-static_cast<long>(k)), Rational(k + 1), s / 2}, {(2 * s + 3) / 4, Rational(1, 2)},
                    Rational(1)};
    return sign * pfq_terminating_exact(h);
  }
  RationalHyper h{{Rational(-static_cast<long>(k)), Rational(k + 2), (s + 1) / 2},
                  {(2 * s + 5) / 4, Rational(3, 2)},
                  Rational(1)};
  return 2 * sign * Rational(k + 1) * pfq_terminating_exact(h);
}

Rational mellin_ratio_telescoped(unsigned n, const Rational& s) {
  auto r = mellin_ratio_exact(mellin_U_closed(n), s, mellin_U_closed(0), s + Rational(n % 2));
  if (!r) throw PoleError("closed-form ratio did not telescope");
  return *r;
}

namespace {

BigComplex cplx(const Rational& r, prec_t p) { return BigComplex(r, p); }

}  // namespace

BigComplex lemma6_eval(unsigned n, const BigComplex& s, prec_t bits) {
  const prec_t wp = bits + 32;
  const BigComplex sw = s.with_precision(wp);
  const BigComplex half_s = sw * Rational(1, 2);
  const long k = n / 2;
  const BigComplex g34 = gamma(cplx(Rational(3, 4), wp));
  const BigComplex four_k = cplx(Rational(4).pow(k), wp);
  ComplexHyper h;
  h.argument = cplx(Rational(1), wp);
  BigComplex pre;
  if (n % 2 == 0) {
    if (!(s.re().sign() > 0)) throw PreconditionError("even index requires Re s > 0");
    pre = g34 * Rational(1, 2) * four_k * gamma_ratio(half_s + Rational(k), half_s + Rational(4 * k + 3, 4));
    h.numerator = {cplx(Rational(1, 2) - k, wp), cplx(Rational(1, 4) - k, wp) - half_s, cplx(Rational(-k), wp)};
    h.denominator = {cplx(Rational(1 - k), wp) - half_s, cplx(Rational(-2 * k), wp)};
  } else {
    if (!(s.re() > BigFloat(-1L, wp))) throw PreconditionError("odd index requires Re s > -1");
    pre = g34 * four_k * gamma_ratio(half_s + Rational(2 * k + 1, 2), half_s + Rational(4 * k + 5, 4));
    h.numerator = {cplx(Rational(-1, 2) - k, wp), cplx(Rational(-1, 4) - k, wp) - half_s, cplx(Rational(-k), wp)};
    h.denominator = {cplx(Rational(1, 2) - k, wp) - half_s, cplx(Rational(-1 - 2 * k), wp)};
  }
  return (pre * pfq_numeric(h, wp)).with_precision(bits);
}

BigComplex u_hypergeometric_eval(unsigned n, const BigComplex& s, UHyperVariant variant, prec_t bits) {
  const prec_t wp = bits + 32;
  const BigComplex sw = s.with_precision(wp);
  const BigComplex h_ns = (sw + Rational(n)) * Rational(1, 2);  // (n+s)/2
  const BigComplex g34 = gamma(cplx(Rational(3, 4), wp));
  BigComplex pre = g34 * gamma_ratio(h_ns, h_ns + Rational(3, 4));
  ComplexHyper h;
  h.argument = cplx(Rational(1), wp);
  const BigComplex one_minus = cplx(Rational(1), wp) - h_ns;
  if (variant == UHyperVariant::a) {
    pre = pre * Rational(n + 1, 2);
    h.numerator = {cplx(Rational(3, 4), wp), cplx(Rational(1 - static_cast<long>(n), 2), wp),
                   cplx(Rational(-static_cast<long>(n), 2), wp)};
    h.denominator = {cplx(Rational(3, 2), wp), one_minus};
  } else {
    pre = pre * (Rational(2).pow(n) / 2);
    h.numerator = {cplx(Rational(1 - static_cast<long>(n), 2), wp), cplx(Rational(-static_cast<long>(n), 2), wp),
                   cplx(Rational(1, 4), wp) - h_ns};
    h.denominator = {cplx(Rational(-static_cast<long>(n)), wp), one_minus};
  }
  return (pre * pfq_numeric(h, wp)).with_precision(bits);
}

namespace {

// M_j(s) for any integer j, as a signed closed form (nullopt for M_{-1} = 0).
struct SignedForm {
  int sign;
  std::optional<MellinClosedForm> form;
};
SignedForm signed_U_form(long j) {
  if (j >= 0) return {1, mellin_U_closed(static_cast<unsigned>(j))};
  if (j == -1) return {0, std::nullopt};
  return {-1, mellin_U_closed(static_cast<unsigned>(-j - 2))};
}

// M_j(s + shift) / M_0(s + c), with c the parity class of the term.
Rational ratio_to_reference(long j, const Rational& s, long shift) {
  SignedForm f = signed_U_form(j);
  if (!f.form) return Rational(0);
  long c = ((static_cast<long>(f.form->epsilon) + shift) % 2 + 2) % 2;
  auto r = mellin_ratio_exact(*f.form, s + Rational(shift), mellin_U_closed(0), s + Rational(c));
  if (!r) throw PoleError("transform ratio did not telescope");
  return Rational(f.sign) * *r;
}

}  // namespace

IdentityOutcome verify_index_shift_a(unsigned n, unsigned m, const Rational& s) {
  IdentityOutcome out;
  try {
    Rational lhs = Rational(2).pow(m) * ratio_to_reference(n, s, m);
    Rational rhs(0);
    for (unsigned r = 0; r <= m; ++r)
      rhs += binomial(m, r) * ratio_to_reference(static_cast<long>(m + n) - 2 * static_cast<long>(r), s, 0);
    out.ok = lhs == rhs;
    out.detail = "lhs=" + lhs.str() + " rhs=" + rhs.str();
  } catch (const PoleError& e) {
    out.applicable = false;
    out.detail = e.what();
  }
  return out;
}

IdentityOutcome verify_index_shift_b(unsigned n, unsigned k, const Rational& s) {
  IdentityOutcome out;
  try {
    Rational lhs = ratio_to_reference(n, s, 0);
    Rational rhs(0);
    for (unsigned r = 0; r <= k; ++r) {
      Rational term = binomial(k, r) * Rational(2).pow(r) *
                      ratio_to_reference(static_cast<long>(n) - 2 * static_cast<long>(k) + r, s, r);
      if ((k - r) % 2) term = -term;
      rhs += term;
    }
    out.ok = lhs == rhs;
    out.detail = "lhs=" + lhs.str() + " rhs=" + rhs.str();
  } catch (const PoleError& e) {
    out.applicable = false;
    out.detail = e.what();
  }
  return out;
}

namespace {

BigComplex gamma_quotient(const Rational& a, const Rational& b, prec_t wp) {
  return gamma_ratio(BigComplex(a, wp), BigComplex(b, wp));
}

double rel(const BigComplex& a, const BigComplex& b) { return relative_difference(a, b).to_double(); }

// Rearranged double-sum form at rational t for the second kind, summed in
// exact arithmetic per Gamma class.
struct RearrangedSum {
  Rational even_part;  // multiplies Gamma(s/2)/Gamma(s/2+3/4)
  Rational odd_part;   // multiplies Gamma((s+1)/2)/Gamma(s/2+5/4)
  unsigned terms = 0;
  double tail = 0;
};

RearrangedSum rearranged_sum(const Rational& s, const Rational& t, prec_t bits) {
  RearrangedSum out;
  const Rational z = Rational(4) / (t * t);
  const double stop = std::ldexp(1.0, -static_cast<int>(std::min<prec_t>(bits, 1000)) - 8);
  unsigned quiet = 0;
  double scale = 0;
  for (long k = 0; k < 2000; ++k) {
    Rational sign = (k % 2) ? Rational(-1) : Rational(1);
    Rational tk = t.pow(2 * k);
    RationalHyper h1{{Rational(1 - k, 2), s / 2, Rational(-k, 2)}, {Rational(1, 2), (2 * s + 3) / 4}, z};
    Rational e = sign * tk * pfq_terminating_exact(h1);
    Rational o(0);
    if (k > 0) {
      RationalHyper h2{{Rational(1 - k, 2), Rational(2 - k, 2), (s + 1) / 2}, {Rational(3, 2), (2 * s + 5) / 4}, z};
      o = -sign * tk * Rational(2 * k) / t * pfq_terminating_exact(h2);
    }
    out.even_part += e;
    out.odd_part += o;
    out.terms = static_cast<unsigned>(k + 1);
    double mag = std::fabs(e.to_double()) + std::fabs(o.to_double());
    scale = std::max(scale, std::fabs(out.even_part.to_double()) + std::fabs(out.odd_part.to_double()));
    out.tail = mag;
    if (mag <= stop * scale) {
      if (++quiet >= 4) break;
    } else {
      quiet = 0;
    }
  }
  return out;
}

}  // namespace

GeneratingReport verify_generating_functions(ChebKind family, const Rational& s, unsigned order,
                                             std::optional<Rational> t, prec_t bits) {
  if (!(s.sign() > 0)) throw PreconditionError("generating functions need Re s > 0");
  if (order > 24) throw PreconditionError("order must be <= 24");
  const prec_t wp = bits + 32;
  GeneratingReport rep;
  rep.order = order;

  // Even and odd parts of the closed right side as exact series times
  // numeric Gamma constants.
  BigComplex even_const, odd_const;
  RationalSeries even_series = RationalSeries::constant(0, order), odd_series = RationalSeries::constant(0, order);
  if (family == ChebKind::U) {
    BigComplex g = gamma(BigComplex(Rational(3, 4), wp)) * Rational(1, 2);
    even_const = g * gamma_quotient(s / 2, s / 2 + Rational(3, 4), wp);
    odd_const = g * gamma_quotient((s + 1) / 2, s / 2 + Rational(5, 4), wp) * Rational(2);
    even_series = series_compose_rational({Rational(1), {Rational(1), s / 2}, {(2 * s + 3) / 4}}, order);
    odd_series = series_compose_rational({Rational(2), {Rational(1), (s + 1) / 2}, {(2 * s + 5) / 4}}, order).shifted(1).truncated(order);
  } else {
    BigComplex g = gamma(BigComplex(Rational(1, 2), wp)) * Rational(1, 4);
    even_const = g * gamma_quotient(s / 2, s / 2 + Rational(3, 2), wp);
    odd_const = g * gamma_quotient((s + 1) / 2, s / 2 + Rational(2), wp) * Rational(2);
    RationalSeries one_minus_t2 = RationalSeries(std::vector<Rational>{1, 0, -1}, order);
    even_series = one_minus_t2 * series_compose_rational({Rational(1), {Rational(1), s / 2}, {(s + 3) / 2}}, order);
    odd_series = one_minus_t2 *
                 series_compose_rational({Rational(2), {Rational(1), (s + 1) / 2}, {(s + 4) / 2}}, order).shifted(1).truncated(order);
  }

  double worst = 0;
  for (unsigned k = 0; k <= order; ++k) {
    BigComplex coeff = even_const * even_series.coeff(k) + odd_const * odd_series.coeff(k);
    MellinClosedForm f = family == ChebKind::U ? mellin_U_closed(k) : mellin_T_closed(k);
    BigComplex expect = mellin_eval(f, BigComplex(s, wp), wp);
    if (family == ChebKind::T && k >= 1) expect = expect * Rational(2);
    worst = std::max(worst, rel(coeff, expect));
  }
  rep.max_coefficient_deviation = worst;

  if (t) {
    if (family != ChebKind::U) throw PreconditionError("the rearranged form is stated for the second kind");
    if (t->abs() > Rational(1, 8)) throw DivergenceError("rearranged series checked only for |t| <= 1/8");
    if (t->is_zero()) throw PreconditionError("t must be nonzero");
    // Closed G(t, s) with the 2F1 at z = 4t^2/(1+t^2)^2.
    const Rational t2 = *t * *t;
    const Rational z = 4 * t2 / ((1 + t2) * (1 + t2));
    BigComplex g = gamma(BigComplex(Rational(3, 4), wp)) * Rational(1, 2);
    BigComplex ge = g * gamma_quotient(s / 2, s / 2 + Rational(3, 4), wp);
    BigComplex go = g * gamma_quotient((s + 1) / 2, s / 2 + Rational(5, 4), wp);
    BigComplex f1 = pfq_numeric(RationalHyper{{Rational(1), s / 2}, {(2 * s + 3) / 4}, z}, wp);
    BigComplex f2 = pfq_numeric(RationalHyper{{Rational(1), (s + 1) / 2}, {(2 * s + 5) / 4}, z}, wp);
    BigComplex closed = (ge * f1 + go * f2 * (2 * *t / (1 + t2))) * (Rational(1) / (1 + t2));

    RearrangedSum rs = rearranged_sum(s, *t, bits);
    BigComplex rearranged = ge * rs.even_part + go * rs.odd_part;
    rep.summation_deviation = rel(rearranged, closed);
    rep.summation_terms = rs.terms;
    rep.summation_tail = rs.tail;

    // Direct power series sum_k M_k(s) t^k.
    BigComplex direct(Rational(0), wp);
    BigComplex tp(Rational(1), wp);
    const double stop = std::ldexp(1.0, -static_cast<int>(bits) - 8);
    const unsigned kmax = 40 + static_cast<unsigned>(bits / std::max(0.5, -std::log2(t->abs().to_double())));
    const std::vector<RatPoly> table = p_poly_U_table(kmax);
    for (unsigned k = 0; k <= kmax; ++k) {
      BigComplex term = mellin_eval(mellin_U_closed(k, table[k]), BigComplex(s, wp), wp) * tp;
      direct += term;
      if (k > 8 && abs(term).to_double() <= stop * abs(direct).to_double()) break;
      tp = tp * *t;
    }
    rep.direct_deviation = rel(closed, direct);
  }
  return rep;
}

}  // namespace chebmellin
