#include <algorithm>
#include <cmath>

#include "chebmellin/errors.hpp"
#include "chebmellin/numerics.hpp"

namespace chebmellin {

namespace {

// Integer-coefficient primitive multiple of p (same roots).
std::vector<mpz_class> primitive_integer_coeffs(const RatPoly& p) {
  mpz_class l(1);
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g(0);
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.numerator() * (l / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

std::vector<mpz_class> small_divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> d;
  if (v == 0 || v > mpz_class("1000000000000")) return d;
  unsigned long n = v.get_ui();
  for (unsigned long k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      d.push_back(mpz_class(k));
      if (k * k != n) d.push_back(mpz_class(n / k));
    }
  }
  return d;
}

// Divides out every root in `candidates` (with multiplicity) from p.
void extract_roots(RatPoly& p, const std::vector<Rational>& candidates, std::vector<Rational>& found) {
  for (const auto& c : candidates) {
    while (p.degree() >= 1 && p(c).is_zero()) {
      found.push_back(c);
      p = p.divmod(RatPoly::linear(-c, Rational(1))).first;
    }
  }
}

struct RealPoly {
  std::vector<BigFloat> c;
  BigComplex operator()(const BigComplex& z) const {
    BigComplex acc(BigFloat(0L, z.precision()));
    for (size_t k = c.size(); k-- > 0;) {
      acc *= z;
      acc = acc + BigComplex(c[k].with_precision(z.precision()));
    }
    return acc;
  }
  // value and derivative
  std::pair<BigComplex, BigComplex> eval2(const BigComplex& z) const {
    BigComplex v(BigFloat(0L, z.precision())), d(BigFloat(0L, z.precision()));
    for (size_t k = c.size(); k-- > 0;) {
      d *= z;
      d += v;
      v *= z;
      v = v + BigComplex(c[k]);
    }
    return {v, d};
  }
};

RealPoly to_real(const RatPoly& p, prec_t prec) {
  RealPoly r;
  for (const auto& c : p.coeffs()) r.c.emplace_back(c, prec);
  return r;
}

// Fujiwara bound on |roots| of q.
double fujiwara_bound(const RatPoly& q) {
  const unsigned d = q.degree();
  const double lead = std::fabs(q.leading().to_double());
  double best = 0;
  for (unsigned k = 1; k <= d; ++k) {
    double ratio = std::fabs(q.coeff(d - k).to_double()) / lead;
    if (k == d) ratio /= 2;
    best = std::max(best, std::pow(ratio, 1.0 / k));
  }
  return 2 * best;
}

struct AberthOutcome {
  std::vector<BigComplex> roots;
  bool converged;
  unsigned iterations;
};

AberthOutcome aberth(const RatPoly& p, prec_t wp) {
  const unsigned d = p.degree();
  RealPoly f = to_real(p, wp);
  // Center the start circle at 1/2.
  const double radius = std::max(fujiwara_bound(poly_shift(p, Rational(1, 2))), 1e-3) * 1.1;
  std::vector<BigComplex> z;
  const double two_pi = 2 * M_PI;
  for (unsigned k = 0; k < d; ++k) {
    // Generic angular offset and slightly varying radii break the
    // reflection symmetry of the target root set.
    double theta = two_pi * k / d + 0.4;
    double r = radius * (1.0 + 0.01 * k / d);
    z.emplace_back(BigFloat(0.5 + r * std::cos(theta), wp), BigFloat(r * std::sin(theta), wp));
  }
  const BigFloat tol = ldexp(BigFloat(1L, wp), -static_cast<long>(wp) + 12);
  const unsigned cap = 500 + 50 * d;
  for (unsigned it = 1; it <= cap; ++it) {
    bool done = true;
    for (unsigned k = 0; k < d; ++k) {
      auto [v, dv] = f.eval2(z[k]);
      if (v.is_zero()) continue;
      BigComplex n = v / dv;
      BigComplex sum(BigFloat(0L, wp));
      for (unsigned j = 0; j < d; ++j) {
        if (j == k) continue;
        sum += BigComplex(BigFloat(1L, wp)) / (z[k] - z[j]);
      }
      BigComplex w = n / (BigComplex(BigFloat(1L, wp)) - n * sum);
      z[k] -= w;
      BigFloat zscale = max(abs(z[k]), BigFloat(1L, wp));
      if (abs(w) > tol * zscale) done = false;
    }
    if (done) return {z, true, it};
  }
  return {z, false, cap};
}

BigComplex newton_polish(const RatPoly& p, BigComplex z, prec_t prec) {
  RealPoly f = to_real(p, prec);
  z = z.with_precision(prec);
  const BigFloat tol = ldexp(BigFloat(1L, prec), -static_cast<long>(prec) + 8);
  for (int it = 0; it < 12; ++it) {
    auto [v, dv] = f.eval2(z);
    if (v.is_zero() || dv.is_zero()) break;
    BigComplex step = v / dv;
    z -= step;
    if (abs(step) <= tol * max(abs(z), BigFloat(1L, prec))) break;
  }
  return z;
}

bool less_by_imag(const BigComplex& a, const BigComplex& b) {
  if (a.im() < b.im()) return true;
  if (b.im() < a.im()) return false;
  return a.re() < b.re();
}

}  // namespace

ZeroReport find_roots(const RatPoly& p_in, prec_t bits) {
  if (p_in.is_zero()) throw PreconditionError("find_roots: zero polynomial");
  ZeroReport zr;
  zr.precision_bits = bits;
  if (p_in.degree() == 0) {
    zr.residual_bound = BigFloat(0L, bits);
    zr.max_re_deviation = BigFloat(0L, bits);
    zr.min_gap = BigFloat::infinity(bits);
    return zr;
  }
  RatPoly p = p_in;

  // Rational root theorem on small extreme coefficients.
  std::vector<Rational> exact;
  {
    auto ic = primitive_integer_coeffs(p);
    if (ic.front() == 0) extract_roots(p, {Rational(0)}, exact);
    auto ic2 = primitive_integer_coeffs(p);
    auto num = small_divisors(ic2.front());
    auto den = small_divisors(ic2.back());
    std::vector<Rational> cands;
    for (const auto& a : num)
      for (const auto& b : den) {
        cands.emplace_back(a, b);
        cands.emplace_back(mpz_class(-a), b);
      }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    extract_roots(p, cands, exact);
  }

  const prec_t wp = bits + 64;
  std::vector<BigComplex> numeric;
  bool converged = true;
  unsigned iterations = 0;
  for (int round = 0; p.degree() >= 1 && round < 4; ++round) {
    AberthOutcome out = aberth(p, wp);
    iterations += out.iterations;
    converged = out.converged;
    // A real root r = u/v of the primitive integer polynomial has v | lead,
    // so round(r * lead) / lead is its exact value.
    auto ic = primitive_integer_coeffs(p);
    Rational lead(ic.back());
    std::vector<Rational> guesses;
    const BigFloat small = ldexp(BigFloat(1L, wp), -static_cast<long>(bits) / 2);
    for (const auto& r : out.roots) {
      if (abs(r.im()) > small * max(abs(r.re()), BigFloat(1L, wp))) continue;
      BigFloat scaled = r.re() * lead;
      BigFloat rounded(0L, wp);
      mpfr_rint(rounded.get(), scaled.get(), MPFR_RNDN);
      guesses.push_back(rounded.to_rational() / lead);
    }
    size_t before = exact.size();
    extract_roots(p, guesses, exact);
    if (exact.size() == before) {
      numeric = std::move(out.roots);
      break;
    }
  }

  // Polish against the original polynomial with enough guard bits for the
  // residual contract.
  BigFloat maxc(0L, wp);
  for (const auto& c : p_in.coeffs()) maxc = max(maxc, abs(BigFloat(c, wp)));
  for (auto& r : numeric) {
    BigFloat rr = abs(r);
    BigFloat scale(0L, wp), pw(1L, wp);
    for (const auto& c : p_in.coeffs()) {
      scale += abs(BigFloat(c, wp)) * pw;
      pw *= rr;
    }
    double extra = std::max(0.0, log2(scale / maxc).to_double());
    prec_t pp = bits + 48 + static_cast<prec_t>(std::ceil(extra));
    r = newton_polish(p_in, r, std::max(pp, wp));
  }

  for (const auto& q : exact) {
    zr.real_roots.push_back(q);
    numeric.emplace_back(q, Rational(0), wp);
  }
  std::sort(zr.real_roots.begin(), zr.real_roots.end());
  std::sort(numeric.begin(), numeric.end(), less_by_imag);

  zr.converged = converged;
  zr.iterations = iterations;
  zr.residual_bound = BigFloat(0L, bits);
  zr.max_re_deviation = BigFloat(0L, bits);
  const Rational half(1, 2);
  for (const auto& r : numeric) {
    prec_t rp = r.precision();
    BigFloat mc(0L, rp);
    for (const auto& c : p_in.coeffs()) mc = max(mc, abs(BigFloat(c, rp)));
    BigFloat res = abs(evaluate(p_in, r)) / mc;
    zr.residuals.push_back(res.with_precision(bits));
    zr.residual_bound = max(zr.residual_bound, res.with_precision(bits));
    zr.max_re_deviation = max(zr.max_re_deviation, abs(r.re() + (-half)).with_precision(bits));
  }

  zr.min_gap = BigFloat::infinity(bits);
  for (size_t i = 0; i < numeric.size(); ++i)
    for (size_t j = i + 1; j < numeric.size(); ++j)
      zr.min_gap = min(zr.min_gap, abs(numeric[i] - numeric[j]).with_precision(bits));

  // Conjugate pairing to half the working precision.
  const BigFloat ptol = ldexp(BigFloat(1L, bits), -static_cast<long>(bits) / 2);
  std::vector<bool> used(numeric.size(), false);
  for (size_t i = 0; i < numeric.size() && zr.conjugate_pairing_ok; ++i) {
    if (used[i]) continue;
    BigFloat sc = max(abs(numeric[i]), BigFloat(1L, bits));
    if (abs(numeric[i].im()) <= ptol * sc) {
      used[i] = true;
      continue;
    }
    bool matched = false;
    for (size_t j = 0; j < numeric.size(); ++j) {
      if (j == i || used[j]) continue;
      if (abs(numeric[j] - numeric[i].conj()) <= ptol * sc) {
        used[i] = used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) zr.conjugate_pairing_ok = false;
  }

  for (auto& r : numeric) r = r.with_precision(std::max<prec_t>(bits, r.precision()));
  zr.roots = std::move(numeric);
  return zr;
}

const char* verdict_name(LineVerdict v) {
  switch (v) {
    case LineVerdict::critical: return "critical";
    case LineVerdict::real_line: return "real-line";
    case LineVerdict::mixed: return "mixed";
  }
  return "?";
}

CriticalLineReport critical_line_report(const ZeroReport& zr, double tol) {
  CriticalLineReport rep;
  if (zr.roots.empty()) {
    rep.vacuous = true;
    rep.verdict = LineVerdict::critical;
    return rep;
  }
  const BigFloat t(tol, zr.precision_bits);
  if (zr.max_re_deviation <= t && zr.conjugate_pairing_ok) {
    rep.verdict = LineVerdict::critical;
    return rep;
  }
  bool all_real = true;
  for (const auto& r : zr.roots)
    if (abs(r.im()) > t) all_real = false;
  if (all_real) {
    rep.verdict = LineVerdict::real_line;
    return rep;
  }
  rep.verdict = LineVerdict::mixed;
  const Rational half(1, 2);
  for (size_t i = 0; i < zr.roots.size(); ++i) {
    const auto& r = zr.roots[i];
    if (abs(r.im()) > t && abs(r.re() + (-half)) > t) rep.offenders.push_back(i);
  }
  return rep;
}

}  // namespace chebmellin
