#include <cmath>

#include "chebmellin/errors.hpp"
#include "chebmellin/gegen_mellin.hpp"
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

// p / d when the division is exact.
std::optional<RatPoly> exact_quotient(const RatPoly& p, const RatPoly& d) {
  auto [q, r] = p.divmod(d);
  if (!r.is_zero()) return std::nullopt;
  return q.with_variable(Variable::x);
}

}  // namespace

IdentityOutcome verify_gegen_expansion_a(unsigned m) {
  const auto P = gegenbauer_table(m, Rational(1, 2));
  RatPoly sum = xp({0});
  for (unsigned k = 0; k <= m; ++k) sum += P[k] * P[m - k];
  return outcome(sum == chebyshev_poly(ChebKind::U, m), sum.str());
}

IdentityOutcome verify_gegen_expansion_b(unsigned m) {
  std::vector<RatPoly> U;
  for (unsigned k = 0; k <= m + 1; ++k) U.push_back(chebyshev_poly(ChebKind::U, k));
  RatPoly conv = xp({0});
  for (unsigned k = 0; k <= m; ++k) conv += U[k] * U[m - k];
  const RatPoly half_deriv = U[m + 1].derivative() * Rational(1, 2);
  const RatPoly num = xp({0, Rational(m + 1)}) * U[m + 1] - U[m] * Rational(m + 2);
  auto q = exact_quotient(num, xp({-2, 0, 2}));
  if (!q) return outcome(false, "closed form not divisible by 2(x^2-1)");
  bool ok = conv == half_deriv && conv == *q;
  return outcome(ok, conv.str());
}

IdentityOutcome verify_gegen_expansion_c(unsigned m, const Rational& l1, const Rational& l2) {
  const auto A = gegenbauer_table(m, l1), B = gegenbauer_table(m, l2);
  RatPoly sum = xp({0});
  for (unsigned k = 0; k <= m; ++k) sum += A[k] * B[m - k];
  return outcome(sum == gegenbauer_poly(m, l1 + l2), sum.str());
}

IdentityOutcome verify_eq52(unsigned n) {
  const RatPoly Un = chebyshev_poly(ChebKind::U, n), Un1 = chebyshev_poly(ChebKind::U, n + 1);
  auto q2 = exact_quotient(xp({0, Rational(n + 1)}) * Un1 - Un * Rational(n + 2), xp({-2, 0, 2}));
  const RatPoly Pn = legendre_poly(n), Pn1 = legendre_poly(n + 1);
  auto q32 = exact_quotient((xp({0, 1}) * Pn1 - Pn) * Rational(n + 1), xp({-1, 0, 1}));
  bool ok = q2 && q32 && *q2 == gegenbauer_poly(n, Rational(2)) && *q32 == gegenbauer_poly(n, Rational(3, 2));
  return outcome(ok, ok ? "exact" : "mismatch");
}

IdentityOutcome verify_legendre_identity(unsigned n) {
  // sum_k (n)_k (-n)_k / ((1/2)_k k!) ((1-x)/2)^k
  RatPoly sum = xp({0});
  RatPoly w = xp({1});
  const RatPoly base = xp({Rational(1, 2), Rational(-1, 2)});
  for (unsigned k = 0; k <= n; ++k) {
    Rational c = pochhammer(Rational(n), k) * pochhammer(Rational(-static_cast<long>(n)), k) /
                 (pochhammer(Rational(1, 2), k) * factorial(k));
    sum += w * c;
    w *= base;
  }
  return outcome(sum == chebyshev_poly(ChebKind::T, n), sum.str());
}

namespace {

Rational large_lambda_deviation(unsigned n, const Rational& x, const Rational& lambda) {
  Rational c1 = pochhammer(2 * lambda, n) / factorial(n);
  Rational v = gegenbauer_poly(n, lambda)(x) / c1 - x.pow(n);
  return v.abs();
}

}  // namespace

LargeLambdaReport large_lambda_check(unsigned n, const Rational& x) {
  LargeLambdaReport rep;
  const Rational l5(100000), l6(1000000), l7(10000000);
  rep.deviation_at_1e6 = large_lambda_deviation(n, x, l6);
  rep.bound = Rational(10 * n * n) * x.abs() / l6;
  rep.within_bound = rep.deviation_at_1e6 <= rep.bound;
  const Rational d5 = large_lambda_deviation(n, x, l5), d7 = large_lambda_deviation(n, x, l7);
  if (d7.is_zero()) {
    rep.decay_ratio = d5.is_zero() ? 100 : INFINITY;
    rep.decays = d5.is_zero();
  } else {
    rep.decay_ratio = (d5 / d7).to_double();
    rep.decays = rep.decay_ratio > 50 && rep.decay_ratio < 200;
  }
  return rep;
}

double eq51_deviation(unsigned n, const Rational& lambda, const Rational& x, prec_t bits) {
  AuxParams p;
  p.n = n;
  p.lambda = lambda.to_double();
  p.x = x.to_double();
  BigComplex q = auxiliary_quadrature(AuxKind::eq51, p, bits);
  BigComplex exact(gegenbauer_poly(n, lambda)(x), q.precision());
  return relative_difference(q, exact).to_double();
}

double eq23_deviation(unsigned n, const Rational& beta, const Rational& s, prec_t bits) {
  if (!(beta < Rational(1))) throw PreconditionError("beta < 1 required");
  AuxParams p;
  p.n = n;
  p.beta = beta.to_double();
  p.s = {s.to_double(), 0.0};
  BigComplex left = auxiliary_quadrature(AuxKind::eq23, p, bits);
  const prec_t wp = bits + 16;
  const Rational nn(n);
  RationalHyper h{{1 - beta, (1 - nn) / 2, -nn / 2}, {2 * (1 - beta), 1 - (nn + s) / 2}, Rational(1)};
  BigFloat two_pow = pow(BigFloat(2L, wp), BigFloat(2 * beta - 1, wp));
  BigComplex g = gamma(BigComplex(Rational(1, 2), wp)) * gamma_ratio(BigComplex(1 - beta, wp), BigComplex(Rational(3, 2) - beta, wp));
  BigComplex right = g * two_pow * pfq_terminating_exact(h);
  return relative_difference(left, right.with_precision(left.precision())).to_double();
}

}  // namespace chebmellin
