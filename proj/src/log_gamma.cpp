#include <cmath>
#include <mutex>

#include "chebmellin/errors.hpp"
#include "chebmellin/numerics.hpp"

namespace chebmellin {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // B_0, B_1, ...

void extend_bernoulli(unsigned k) {
  // Akiyama-Tanigawa, recomputed from scratch up to k (cheap at our sizes).
  if (g_bernoulli.size() > k) return;
  unsigned target = std::max<unsigned>(k, 2 * static_cast<unsigned>(g_bernoulli.size()));
  std::vector<Rational> a(target + 1);
  std::vector<Rational> out(target + 1);
  for (unsigned m = 0; m <= target; ++m) {
    a[m] = Rational(1) / Rational(m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out[m] = a[0];
  }
  // The algorithm yields B_1 = +1/2; use the convention B_1 = -1/2.
  if (target >= 1) out[1] = Rational(-1, 2);
  g_bernoulli = std::move(out);
}

}  // namespace

Rational bernoulli(unsigned k) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  extend_bernoulli(k);
  return g_bernoulli[k];
}

BigComplex log_gamma(const BigComplex& z_in) {
  if (z_in.is_nonpositive_integer()) throw PoleError("log_gamma pole at " + z_in.re().str(20));
  const prec_t prec = z_in.precision();
  const prec_t wp = prec + 32;
  BigComplex z = z_in.with_precision(wp);

  // Shift so that Re w >= R; then the Stirling terms fall below 2^-wp before
  // they start to grow.
  const double R = static_cast<double>(wp) / 9.0 + 10.0;
  const double re = z.re().to_double();
  long shift = re < R ? static_cast<long>(std::ceil(R - re)) : 0;

  BigComplex correction(BigFloat(0L, wp));
  for (long k = 0; k < shift; ++k) correction += log(z + Rational(k));
  BigComplex w = z + Rational(shift);

  const BigFloat half_log_2pi = log(BigFloat::pi(wp) * 2L) / 2L;
  BigComplex result = (w + Rational(-1, 2)) * log(w) - w + BigComplex(half_log_2pi);
  BigComplex winv = BigComplex(BigFloat(1L, wp)) / w;
  BigComplex winv2 = winv * winv;
  BigComplex wpow = winv;  // w^{-(2k-1)}
  const BigFloat eps = ldexp(BigFloat(1L, wp), -static_cast<long>(wp));
  const BigFloat scale = max(abs(result), BigFloat(1L, wp));
  for (unsigned k = 1;; ++k) {
    Rational c = bernoulli(2 * k) / Rational(static_cast<long>((2 * k) * (2 * k - 1)));
    BigComplex term = wpow * c;
    result += term;
    // For Re w > 0 the remainder is at most twice the first omitted term.
    Rational cn = bernoulli(2 * k + 2) / Rational(static_cast<long>((2 * k + 2) * (2 * k + 1)));
    BigFloat next = abs(wpow * winv2 * cn) * 2L;
    if (next < eps * scale) break;
    if (k > 4 * wp) throw ConvergenceError("log_gamma: asymptotic series did not reach precision");
    wpow *= winv2;
  }
  return (result - correction).with_precision(prec);
}

BigComplex gamma(const BigComplex& z) { return exp(log_gamma(z)); }

BigComplex gamma_ratio(const BigComplex& a, const BigComplex& b) {
  if (a.is_nonpositive_integer()) throw PoleError("Gamma pole in numerator at " + a.re().str(20));
  if (b.is_nonpositive_integer()) return BigComplex(BigFloat(0L, a.precision()));
  return exp(log_gamma(a) - log_gamma(b));
}

}  // namespace chebmellin
