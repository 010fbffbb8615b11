#include "chebmellin/gegen_mellin.hpp"

#include <algorithm>
#include <cmath>

#include "chebmellin/errors.hpp"
#include "chebmellin/formal_series.hpp"
#include "chebmellin/hypergeom.hpp"
#include "chebmellin/numerics.hpp"

namespace chebmellin {

GegenParams GegenParams::from_lambda(const Rational& lambda) {
  if (!(lambda > Rational(-1, 2))) throw PreconditionError("lambda must exceed -1/2");
  return {lambda, Rational(3, 4) - lambda / 2};
}

GegenParams GegenParams::from_beta(const Rational& beta) {
  if (!(beta < Rational(1))) throw PreconditionError("beta must be below 1");
  return {Rational(3, 2) - 2 * beta, beta};
}

std::vector<RatPoly> gegenbauer_table(unsigned n_max, const Rational& lambda) {
  std::vector<RatPoly> c{RatPoly({Rational(1)}, Variable::x)};
  if (n_max >= 1) c.push_back(RatPoly({Rational(0), 2 * lambda}, Variable::x));
  const RatPoly x = RatPoly({Rational(0), Rational(1)}, Variable::x);
  for (unsigned m = 0; m + 2 <= n_max; ++m) {
    RatPoly next = x * c[m + 1] * (2 * (lambda + m + 1)) - c[m] * (2 * lambda + m);
    c.push_back(next * (Rational(1) / Rational(m + 2)));
  }
  return c;
}

RatPoly gegenbauer_poly(unsigned n, const Rational& lambda) { return gegenbauer_table(n, lambda).back(); }

RatPoly legendre_poly(unsigned n) { return gegenbauer_poly(n, Rational(1, 2)); }

RatPoly p_poly_gegen(unsigned n, const Rational& lambda) {
  const long N = n / 2;
  const Rational eps(n % 2);
  const Rational a1 = lambda / 2 + Rational(1, 4), a2 = Rational(1 - static_cast<long>(n), 2),
                 a3 = Rational(-static_cast<long>(n), 2), b1 = Rational(1, 2) + lambda;
  // prod_{j<N-k} ((s+eps)/2 + j), built from the top down so each k reuses it.
  std::vector<RatPoly> prod(N + 1);
  prod[0] = RatPoly::constant(1);
  for (long j = 0; j < N; ++j) prod[j + 1] = prod[j] * RatPoly::linear(eps / 2 + j, Rational(1, 2));
  RatPoly res = RatPoly::constant(0);
  Rational c(1);
  for (long k = 0; k <= N; ++k) {
    if (k > 0) {
      if ((b1 + (k - 1)).is_zero()) throw PoleError("pole in (1/2 + lambda)_k");
      c = -c * (a1 + (k - 1)) * (a2 + (k - 1)) * (a3 + (k - 1)) / ((b1 + (k - 1)) * Rational(k));
    }
    if (c.is_zero()) break;
    res += prod[N - k] * c;
  }
  return res;
}

RatPoly p_poly_beta(unsigned n, const Rational& beta) {
  return p_poly_gegen(n, GegenParams::from_beta(beta).lambda);
}

MellinClosedForm mellin_G_closed(unsigned n, const Rational& lambda, bool with_pochhammer) {
  MellinClosedForm f;
  f.family = Family::Gegenbauer;
  f.n = n;
  f.lambda = lambda;
  f.epsilon = static_cast<int>(n % 2);
  f.poly = p_poly_gegen(n, lambda);
  f.const_class = ConstClass::gamma_gegenbauer;
  f.multiplier = (with_pochhammer ? pochhammer(2 * lambda, n) : Rational(1)) / (2 * factorial(n));
  f.gamma_num_offset = Rational(f.epsilon, 2);
  f.gamma_den_offset = (Rational(n) + lambda) / 2 + Rational(1, 4);
  return f;
}

MellinClosedForm mellin_beta_closed(unsigned n, const Rational& beta) {
  MellinClosedForm f = mellin_G_closed(n, GegenParams::from_beta(beta).lambda);
  f.family = Family::Beta;
  f.beta = beta;
  return f;
}

RatPoly difference_equation_residual(unsigned n, const Rational& lambda) {
  const RatPoly p = p_poly_gegen(n, lambda);
  const Rational e(n % 2);
  const Rational nn(n);
  const RatPoly g1 = RatPoly::linear(e / 2 - 1, Rational(1, 2));  // (s+e)/2 - 1
  const RatPoly g0 = RatPoly::linear(e / 2, Rational(1, 2));      // (s+e)/2
  const RatPoly h = RatPoly::linear(nn / 2 + lambda / 2 + Rational(1, 4), Rational(1, 2));
  const RatPoly hm = RatPoly::linear(nn / 2 + lambda / 2 - Rational(3, 4), Rational(1, 2));
  const RatPoly A = RatPoly({6 - 4 * (lambda + 2 * lambda * nn + nn * nn), Rational(-8), Rational(8)});
  const RatPoly B = RatPoly({Rational(-1) + 4 * (nn + lambda) * (nn + lambda), Rational(-4), Rational(-4)});
  const RatPoly C = RatPoly({Rational(2), Rational(-3), Rational(1)}) * Rational(-4);
  return A * g1 * h * p + B * g0 * g1 * poly_shift(p, 2) + C * h * hm * poly_shift(p, -2);
}

namespace {

Rational g_ratio_to_reference(long j, const Rational& lambda, const Rational& s, long shift) {
  if (j < 0) return Rational(0);
  MellinClosedForm f = mellin_G_closed(static_cast<unsigned>(j), lambda);
  long c = ((static_cast<long>(f.epsilon) + shift) % 2 + 2) % 2;
  auto r = mellin_ratio_exact(f, s + Rational(shift), mellin_G_closed(0, lambda), s + Rational(c));
  if (!r) throw PoleError("Gegenbauer ratio did not telescope");
  return *r;
}

}  // namespace

IdentityOutcome verify_gegen_index_recurrence(unsigned n, const Rational& lambda, const Rational& s) {
  IdentityOutcome out;
  if (n < 2) throw PreconditionError("recurrence needs n >= 2");
  try {
    Rational lhs = Rational(n) * g_ratio_to_reference(n, lambda, s, 0);
    Rational rhs = 2 * (lambda + Rational(n) - 1) * g_ratio_to_reference(n - 1, lambda, s, 1) -
                   (2 * lambda + Rational(n) - 2) * g_ratio_to_reference(n - 2, lambda, s, 0);
    out.ok = lhs == rhs;
    out.detail = "lhs=" + lhs.str() + " rhs=" + rhs.str();
  } catch (const PoleError& e) {
    out.applicable = false;
    out.detail = e.what();
  }
  return out;
}

Rational gegen_base_ratio(const Rational& lambda, const Rational& s, bool with_pochhammer) {
  auto r = mellin_ratio_exact(mellin_G_closed(1, lambda, with_pochhammer), s, mellin_G_closed(0, lambda), s + 1);
  if (!r) throw PoleError("base ratio did not telescope");
  return *r / (2 * lambda);
}

namespace {

Rational parity_prefactor(unsigned n, const Rational& s) {
  const Rational e(n % 2);
  Rational r(1);
  for (unsigned j = 0; j < n / 2; ++j) r *= (s + e) / 2 + Rational(j);
  return r;
}

// 2F1(a, b; c; 1) with a or b a non-positive integer.
Rational gauss_terminating(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_nonpositive_integer()) return chu_vandermonde(static_cast<unsigned>(-a.to_long()), b, c);
  if (b.is_nonpositive_integer()) return chu_vandermonde(static_cast<unsigned>(-b.to_long()), a, c);
  throw PreconditionError("2F1(1) not terminating");
}

// Coefficients of q(J) in the falling-factorial basis J(J-1)...(J-r+1),
// by forward differences at 0.
std::vector<Rational> falling_basis(const RatPoly& q) {
  std::vector<Rational> vals;
  for (unsigned i = 0; i <= q.degree(); ++i) vals.push_back(q(Rational(i)));
  std::vector<Rational> cs;
  for (unsigned r = 0; r <= q.degree(); ++r) {
    cs.push_back(vals[0] / factorial(r));
    for (size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
    vals.pop_back();
  }
  return cs;
}

}  // namespace

Corollary1Outcome corollary1_check(unsigned n, unsigned m, const Rational& s) {
  Corollary1Outcome out;
  try {
    out.polynomial = p_poly_beta(n, Rational(-static_cast<long>(m)))(s);
    const Rational pre = parity_prefactor(n, s);
    const Rational nn(n);
    if (m == 0) {
      RationalHyper h{{-(nn + 1) / 2, -nn / 2 - 1}, {-(nn + s) / 2}, Rational(1)};
      Rational f = pfq_terminating_exact(h);
      out.formula = 2 * (nn + s) / ((nn + 1) * (nn + 2)) * pre * (1 - f);
      // Gauss-summation form of the same 2F1, when it telescopes.
      GammaRatio g;
      g.numerator = {-(nn + s) / 2, (nn + 3 - s) / 2};
      g.denominator = {(1 - s) / 2, 1 - s / 2};
      try {
        if (auto gv = try_exact(g); gv && *gv != f) {
          out.detail = "Gauss form " + gv->str() + " != series " + f.str();
          out.ok = false;
          return out;
        }
      } catch (const PoleError&) {
      }
    } else {
      const unsigned K = 2 * m + 1;
      const Rational a = (1 - nn) / 2, b = -nn / 2, d = 1 - nn / 2 - s / 2;
      RatPoly q = RatPoly::constant(1);
      for (unsigned i = 0; i < m; ++i) q *= RatPoly::linear(Rational(i) - Rational(2 * m), 1);
      const std::vector<Rational> cs = falling_basis(q);
      const Rational ap = a - K, bp = b - K, dp = d - K;
      const Rational C = factorial(2 * m + 1) / factorial(m) * pochhammer(dp, K) / (pochhammer(ap, K) * pochhammer(bp, K));
      Rational tot(0);
      for (unsigned r = 0; r < cs.size(); ++r) {
        if (cs[r].is_zero()) continue;
        const Rational ar = ap + r, br = bp + r, dr = dp + r;
        Rational full = gauss_terminating(ar, br, dr);
        Rational part(0), term(1);
        for (unsigned i = 0; i + r < K; ++i) {
          part += term;
          term = term * (ar + i) * (br + i) / ((dr + i) * Rational(i + 1));
        }
        tot += cs[r] * pochhammer(ap, r) * pochhammer(bp, r) / pochhammer(dp, r) * (full - part);
      }
      out.formula = pre * C * tot;
    }
    out.ok = out.formula == out.polynomial;
    out.detail = "formula=" + out.formula.str() + " p=" + out.polynomial.str();
  } catch (const PoleError& e) {
    out.applicable = false;
    out.detail = e.what();
  }
  return out;
}

HahnReport hahn_proportionality(unsigned n, const Rational& lambda, const std::vector<BigComplex>& samples,
                                prec_t bits) {
  HahnReport rep;
  const prec_t wp = bits + 32;
  const long N = n / 2;
  const bool odd = n % 2;
  const Rational a = odd ? Rational(-3, 4) - lambda / 2 - N : Rational(1, 4) - lambda / 2 - N;
  const Rational b(0);
  const Rational c = Rational(3, 4) - lambda / 2 - N;
  const Rational d = odd ? Rational(3, 2) : Rational(1, 2);
  const RatPoly p = p_poly_gegen(n, lambda);
  // i^N (a+c)_N (a+d)_N / N!
  const Rational mag = pochhammer(a + c, N) * pochhammer(a + d, N) / factorial(N);
  BigComplex iN = N % 4 == 0 ? BigComplex(Rational(1), wp)
                  : N % 4 == 1 ? BigComplex(Rational(0), Rational(1), wp)
                  : N % 4 == 2 ? BigComplex(Rational(-1), wp)
                               : BigComplex(Rational(0), Rational(-1), wp);
  BigFloat scale(0L, wp);
  for (const auto& co : p.coeffs()) scale = max(scale, abs(BigFloat(co, wp)));
  for (size_t i = 0; i < samples.size(); ++i) {
    const BigComplex s = samples[i].with_precision(wp);
    // a + i x with x = -i(s+eps)/2 is a + (s+eps)/2.
    BigComplex third = (s + Rational(n % 2)) * Rational(1, 2) + a;
    ComplexHyper h;
    h.numerator = {BigComplex(Rational(-N), wp), BigComplex(Rational(N) + a + b + c + d - 1, wp), third};
    h.denominator = {BigComplex(a + c, wp), BigComplex(a + d, wp)};
    h.argument = BigComplex(Rational(1), wp);
    BigComplex hahn = iN * pfq_numeric(h, wp) * mag;
    BigComplex pv = evaluate(p, s);
    BigFloat mod = abs(pv);
    BigFloat sn = max(BigFloat(1L, wp), abs(s));
    BigFloat floor_ = scale * pow(sn, BigFloat(static_cast<long>(p.degree()), wp)) * ldexp(BigFloat(1L, wp), -static_cast<long>(bits) / 2);
    if (mod <= floor_) {
      rep.skipped.push_back(i);
      continue;
    }
    rep.ratios.push_back((hahn / pv).with_precision(bits));
  }
  double spread = 0;
  for (size_t i = 1; i < rep.ratios.size(); ++i)
    spread = std::max(spread, relative_difference(rep.ratios[i], rep.ratios[0]).to_double());
  rep.spread = spread;
  return rep;
}

double gegen_generating_deviation(const Rational& lambda, const Rational& s, unsigned order, prec_t bits) {
  if (!(s.sign() > 0)) throw PreconditionError("Re s > 0 required");
  const prec_t wp = bits + 32;
  const BigComplex k0 = gamma(BigComplex(lambda / 2 + Rational(1, 4), wp)) * Rational(1, 2);
  const Rational h1 = (s + lambda) / 2 + Rational(1, 4), h2 = (s + lambda) / 2 + Rational(3, 4);
  const BigComplex ce = k0 * gamma_ratio(BigComplex(s / 2, wp), BigComplex(h1, wp));
  const BigComplex co = k0 * gamma_ratio(BigComplex((s + 1) / 2, wp), BigComplex(h2, wp)) * (2 * lambda);
  RationalSeries se = series_compose_rational({lambda, {(lambda + 1) / 2, lambda / 2, s / 2}, {Rational(1, 2), h1}}, order);
  RationalSeries so =
      series_compose_rational({lambda + 1, {(lambda + 1) / 2, 1 + lambda / 2, (s + 1) / 2}, {Rational(3, 2), h2}}, order)
          .shifted(1)
          .truncated(order);
  double worst = 0;
  for (unsigned k = 0; k <= order; ++k) {
    BigComplex coeff = ce * se.coeff(k) + co * so.coeff(k);
    BigComplex expect = mellin_eval(mellin_G_closed(k, lambda), BigComplex(s, wp), wp);
    worst = std::max(worst, relative_difference(coeff, expect).to_double());
  }
  return worst;
}

}  // namespace chebmellin
