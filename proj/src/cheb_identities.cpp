#include <cmath>
#include <sstream>

#include "chebmellin/cheb_mellin.hpp"
#include "chebmellin/errors.hpp"
#include "chebmellin/hypergeom.hpp"
#include "chebmellin/numerics.hpp"
#include "chebmellin/quadrature.hpp"

namespace chebmellin {

namespace {

RatPoly xp(std::vector<Rational> c) { return RatPoly(std::move(c), Variable::x); }

IdentityOutcome outcome(bool ok, std::string detail) {
  IdentityOutcome o;
  o.ok = ok;
  o.detail = std::move(detail);
  return o;
}

}  // namespace

IdentityOutcome verify_composition_identities(unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw PreconditionError("composition identities need m, n >= 1");
  std::ostringstream why;
  bool ok = true;
  const RatPoly U_mn = chebyshev_poly(ChebKind::U, m * n - 1);
  RatPoly a = chebyshev_poly(ChebKind::U, m - 1).compose(chebyshev_poly(ChebKind::T, n)) *
              chebyshev_poly(ChebKind::U, n - 1);
  RatPoly b = chebyshev_poly(ChebKind::U, n - 1).compose(chebyshev_poly(ChebKind::T, m)) *
              chebyshev_poly(ChebKind::U, m - 1);
  if (!(a == U_mn)) ok = false, why << "U_{m-1}(T_n)U_{n-1} ";
  if (!(b == U_mn)) ok = false, why << "U_{n-1}(T_m)U_{m-1} ";
  RatPoly prod = chebyshev_poly(ChebKind::T, n) * chebyshev_poly(ChebKind::U, m - 1);
  RatPoly half_sum = (chebyshev_U_signed(static_cast<long>(m + n) - 1) +
                      chebyshev_U_signed(static_cast<long>(m) - static_cast<long>(n) - 1)) *
                     Rational(1, 2);
  if (!(prod == half_sum)) ok = false, why << "T_n U_{m-1} ";
  // 2u U_n(2u^2 - 1) = U_{2n+1}(u)
  RatPoly lhs = xp({0, 2}) * chebyshev_poly(ChebKind::U, n).compose(xp({-1, 0, 2}));
  if (!(lhs == chebyshev_poly(ChebKind::U, 2 * n + 1))) ok = false, why << "u-substitution ";
  return outcome(ok, ok ? "exact" : "mismatch: " + why.str());
}

IdentityOutcome verify_explicit_sums(unsigned n, bool printed_prefactor) {
  const RatPoly U = chebyshev_poly(ChebKind::U, n);
  const RatPoly T = chebyshev_poly(ChebKind::T, n);
  const RatPoly x2m1 = xp({-1, 0, 1});
  std::ostringstream why;
  bool ok = true;
  const long N = n / 2;

  // Finite sums.
  RatPoly a_sum = xp({0}), b_sum = xp({0}), c_sum = xp({0});
  RatPoly pw = xp({1});  // (x^2-1)^k
  for (long k = 0; k <= N; ++k) {
    RatPoly xk = RatPoly::monomial(n - 2 * k, 1, Variable::x);
    a_sum += binomial(n + 1, 2 * k + 1) * pw * xk;
    c_sum += binomial(n, 2 * k) * pw * xk;
    Rational bk = binomial(n - k, k) * Rational(2).pow(n - 2 * k);
    if (k % 2) bk = -bk;
    b_sum += RatPoly::monomial(n - 2 * k, bk, Variable::x);
    pw *= x2m1;
  }
  if (!(a_sum == U)) ok = false, why << "(a) sum ";
  if (!(b_sum == U)) ok = false, why << "(b) sum ";
  if (!(c_sum == T)) ok = false, why << "(c) sum ";

  // 2F1 forms: coefficients c_k of 2F1((1-n)/2, -n/2; c; w) with w = 1 - 1/x^2
  // or 1/x^2; every w^k x^n is a polynomial since k <= n/2.
  auto coeffs = [&](const Rational& c) {
    std::vector<Rational> out;
    Rational term(1);
    const Rational a = Rational(1 - static_cast<long>(n), 2), b = Rational(-static_cast<long>(n), 2);
    for (long k = 0; k <= N; ++k) {
      out.push_back(term);
      term = term * (a + k) * (b + k) / ((c + k) * Rational(k + 1));
    }
    return out;
  };
  RatPoly a_hyp = xp({0}), c_hyp = xp({0}), b_hyp = xp({0});
  {
    auto ca = coeffs(Rational(3, 2));
    auto cc = coeffs(Rational(1, 2));
    RatPoly pk = xp({1});
    for (long k = 0; k <= N; ++k) {
      // (1 - 1/x^2)^k x^n = (x^2 - 1)^k x^{n-2k}
      RatPoly t = pk * RatPoly::monomial(n - 2 * k, 1, Variable::x);
      a_hyp += ca[k] * t;
      c_hyp += cc[k] * t;
      pk *= x2m1;
    }
    a_hyp *= Rational(n + 1);
  }
  if (n == 0) {
    b_hyp = xp({1});
  } else {
    auto cb = coeffs(Rational(-static_cast<long>(n)));
    const unsigned e = printed_prefactor ? 2 * n : n;
    for (long k = 0; k <= N; ++k) {
      // (2x)^e x^{-2k}
      if (static_cast<long>(e) < 2 * k) {
        ok = false;
        why << "(b) 2F1 not polynomial ";
        break;
      }
      b_hyp += RatPoly::monomial(e - 2 * k, cb[k] * Rational(2).pow(e), Variable::x);
    }
  }
  if (!(a_hyp == U)) ok = false, why << "(a) 2F1 ";
  if (!(b_hyp == U)) ok = false, why << "(b) 2F1 ";
  if (!(c_hyp == T)) ok = false, why << "(c) 2F1 ";
  return outcome(ok, ok ? "exact" : "mismatch: " + why.str());
}

double exponential_generating_deviation(unsigned j, const Rational& x, const Rational& t, prec_t bits) {
  if (j < 1) throw PreconditionError("j >= 1");
  if (!(x.abs() < Rational(1))) throw PreconditionError("|x| < 1 required");
  if (t.is_zero()) throw PreconditionError("t != 0");
  const prec_t wp = bits + 32;
  // Left side: sum U_n(x) t^n / ((n+1)!)^j, exact partial sums.
  Rational u0(1), u1 = 2 * x, fact(1), tp(1);
  Rational left(0);
  const double stop = std::ldexp(1.0, -static_cast<int>(bits) - 16);
  for (unsigned n = 0; n < 5000; ++n) {
    Rational un = n == 0 ? u0 : u1;
    if (n >= 2) {
      Rational next = 2 * x * u1 - u0;
      u0 = u1;
      u1 = next;
      un = u1;
    }
    fact *= Rational(n + 1);
    const Rational scale = tp / fact.pow(j);
    left += un * scale;
    // |U_n(x)| <= n+1 bounds the next terms.
    if (n > 4 && Rational(n + 2).to_double() * std::fabs(scale.to_double()) <=
                     stop * std::max(1e-300, std::fabs(left.to_double())))
      break;
    tp *= t;
  }
  BigComplex lhs(left, wp);

  const BigFloat xf(x, wp), tf(t, wp);
  const BigFloat root = sqrt(BigFloat(1L, wp) - xf * xf);
  BigComplex rhs;
  if (j == 1) {
    rhs = BigComplex(exp(xf * tf) * sin(tf * root) / (tf * root));
  } else {
    // i/(2t sqrt(1-x^2)) [0F_{j-1}(e^{-iy} t) - 0F_{j-1}(e^{iy} t)], e^{iy} = x + i sqrt(1-x^2)
    auto f = [&](const BigComplex& z) {
      ComplexHyper h;
      h.denominator.assign(j - 1, BigComplex(Rational(1), wp));
      h.argument = z;
      return pfq_numeric(h, wp);
    };
    BigComplex eplus(xf * tf, root * tf), eminus(xf * tf, -(root * tf));
    BigComplex diff = f(eminus) - f(eplus);
    BigComplex i_over(BigFloat(0L, wp), BigFloat(1L, wp) / (BigFloat(2L, wp) * tf * root));
    rhs = i_over * diff;
  }
  return relative_difference(lhs, rhs).to_double();
}

IdentityOutcome verify_beta_transform_exact(unsigned n, const Rational& r, const Rational& q) {
  if (!(r > Rational(-1) && q > Rational(-1))) throw PreconditionError("r, q > -1 required");
  const RatPoly U = chebyshev_poly(ChebKind::U, n);
  // int x^{r+k}(1-x)^q = B(r+1,q+1) (r+1)_k/(r+q+2)_k
  Rational lhs(0);
  for (unsigned k = 0; k <= U.degree(); ++k)
    if (!U.coeff(k).is_zero()) lhs += U.coeff(k) * pochhammer(r + 1, k) / pochhammer(r + q + 2, k);
  RationalHyper h{{Rational(n + 2), Rational(-static_cast<long>(n)), q + 1}, {Rational(3, 2), q + r + 2},
                  Rational(1, 2)};
  Rational rhs = Rational(n + 1) * pfq_terminating_exact(h);
  return outcome(lhs == rhs, "lhs/B=" + lhs.str() + " rhs/B=" + rhs.str());
}

double beta_transform_quadrature_deviation(unsigned n, const Rational& r, const Rational& q, prec_t bits) {
  AuxParams p;
  p.n = n;
  p.r = r.to_double();
  p.q = q.to_double();
  BigComplex left = auxiliary_quadrature(AuxKind::eq312, p, bits);
  const prec_t wp = bits + 16;
  BigComplex beta = gamma(BigComplex(r + 1, wp)) * gamma(BigComplex(q + 1, wp)) / gamma(BigComplex(r + q + 2, wp));
  RationalHyper h{{Rational(n + 2), Rational(-static_cast<long>(n)), q + 1}, {Rational(3, 2), q + r + 2},
                  Rational(1, 2)};
  BigComplex right = beta * (Rational(n + 1) * pfq_terminating_exact(h));
  return relative_difference(left, right.with_precision(left.precision())).to_double();
}

BigComplex double_sum_eval(unsigned n, const Rational& s, prec_t bits) {
  if (!(s.sign() > 0)) throw PreconditionError("Re s > 0 required");
  const prec_t wb = std::min<prec_t>(bits, 160);
  BigComplex total(Rational(0), wb);
  for (unsigned j = 0; j <= n; ++j) {
    Rational c = pochhammer(Rational(n + 2), j) * pochhammer(Rational(-static_cast<long>(n)), j) /
                 (pochhammer(Rational(3, 2), j) * Rational(2).pow(j) * s * pochhammer(s + 1, j));
    if (c.is_zero()) continue;
    RationalHyper h{{Rational(1, 4), (s + 1) / 2, s / 2}, {(s + j + 1) / 2, (s + j) / 2 + 1}, Rational(1)};
    BigComplex f = pfq_unit_argument(to_complex(h, wb), wb, 1e-30).value;
    total += f * c;
  }
  return (total * Rational(n + 1)).with_precision(bits);
}

RatPoly pell_morgan_voyce(PellKind kind, unsigned n) {
  switch (kind) {
    case PellKind::pell: {
      if (n < 1) throw PreconditionError("Pell polynomials start at n = 1");
      // x (-i)^{n-1} U_{n-1}(ix): coefficient of x^{k+1} is u_k (-1)^{(n-1-k)/2}.
      const RatPoly u = chebyshev_poly(ChebKind::U, n - 1);
      std::vector<Rational> c(n + 1, Rational(0));
      for (unsigned k = 0; k <= u.degree(); ++k) {
        if (u.coeff(k).is_zero()) continue;
        const unsigned j = (n - 1 - k) / 2;
        c[k + 1] = (j % 2) ? -u.coeff(k) : u.coeff(k);
      }
      return RatPoly(c, Variable::x);
    }
    case PellKind::mv_B:
      return chebyshev_poly(ChebKind::U, n).compose(xp({1, Rational(1, 2)}));
    case PellKind::mv_b: {
      const RatPoly arg = xp({1, Rational(1, 2)});
      return chebyshev_poly(ChebKind::U, n).compose(arg) - chebyshev_U_signed(static_cast<long>(n) - 1).compose(arg);
    }
  }
  return xp({0});
}

IdentityOutcome verify_pell_morgan_voyce(PellKind kind, unsigned n) {
  const RatPoly p = pell_morgan_voyce(kind, n);
  RatPoly expect = xp({0});
  switch (kind) {
    case PellKind::pell: {
      // p_1 = x, p_2 = 2x^2, p_{m+1} = 2x p_m + p_{m-1}
      RatPoly a = xp({0}), b = xp({0, 1});
      for (unsigned m = 1; m < n; ++m) {
        RatPoly c = xp({0, 2}) * b + a;
        a = b;
        b = c;
      }
      expect = b;
      break;
    }
    case PellKind::mv_B:
      for (unsigned k = 0; k <= n; ++k) expect += RatPoly::monomial(k, binomial(n + k + 1, n - k), Variable::x);
      break;
    case PellKind::mv_b:
      for (unsigned k = 0; k <= n; ++k) expect += RatPoly::monomial(k, binomial(n + k, n - k), Variable::x);
      break;
  }
  return outcome(p == expect, p.str());
}

}  // namespace chebmellin
