#pragma once

// Shared test helpers: a small deterministic generator and exact moment
// oracles built from Beta integrals with an integer first argument.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chebmellin/rational.hpp"
#include "chebmellin/ratpoly.hpp"

namespace testsupport {

using chebmellin::Rational;
using chebmellin::RatPoly;

// splitmix64
struct Gen {
  std::uint64_t state;
  explicit Gen(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational rational(long num_max = 20, long den_max = 20) { return Rational(range(-num_max, num_max), range(1, den_max)); }
  Rational positive_rational(long num_max = 40, long den_max = 12) { return Rational(range(1, num_max), range(1, den_max)); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// B(m, b) = (m-1)! / (b (b+1) ... (b+m-1)) for integer m >= 1.
inline Rational beta_int(long m, const Rational& b) {
  Rational r(1);
  for (long k = 1; k < m; ++k) r *= Rational(k);
  for (long k = 0; k < m; ++k) r /= b + Rational(k);
  return r;
}

// int_0^1 x^{s-1} P(x) (1-x^2)^{w} dx for integer s, when every nonzero
// coefficient x^j has s + j even: sum_j c_j B((s+j)/2, w+1) / 2.
inline Rational weighted_moment(const RatPoly& P, long s, const Rational& w) {
  Rational acc(0);
  for (unsigned j = 0; j <= P.degree(); ++j) {
    const Rational& c = P.coeffs()[j];
    if (c.is_zero()) continue;
    long e = s + static_cast<long>(j);
    if (e % 2 != 0 || e <= 0) throw std::invalid_argument("oracle needs s + j even and positive");
    acc += c * beta_int(e / 2, w + Rational(1)) / Rational(2);
  }
  return acc;
}

// U_n and T_n from the explicit sums, independent of the library's recurrences.
inline RatPoly explicit_U(unsigned n) {
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned k = 0; 2 * k <= n; ++k) {
    Rational v = chebmellin::binomial(static_cast<long>(n - k), static_cast<long>(k)) * Rational(2).pow(n - 2 * k);
    c[n - 2 * k] = k % 2 ? -v : v;
  }
  return RatPoly(c, chebmellin::Variable::x);
}

inline RatPoly explicit_T(unsigned n) {
  if (n == 0) return RatPoly({Rational(1)}, chebmellin::Variable::x);
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned k = 0; 2 * k <= n; ++k) {
    Rational v = Rational(static_cast<long>(n)) / Rational(static_cast<long>(n - k)) *
                 chebmellin::binomial(static_cast<long>(n - k), static_cast<long>(k)) * Rational(2).pow(n - 2 * k) / 2;
    c[n - 2 * k] = k % 2 ? -v : v;
  }
  return RatPoly(c, chebmellin::Variable::x);
}

// C_n^lambda(x) = sum_k (-1)^k (lambda)_{n-k} / (k! (n-2k)!) (2x)^{n-2k}.
inline RatPoly explicit_C(unsigned n, const Rational& lambda) {
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned k = 0; 2 * k <= n; ++k) {
    Rational v = chebmellin::pochhammer(lambda, n - k) / (chebmellin::factorial(k) * chebmellin::factorial(n - 2 * k)) *
                 Rational(2).pow(n - 2 * k);
    c[n - 2 * k] = k % 2 ? -v : v;
  }
  return RatPoly(c, chebmellin::Variable::x);
}

}  // namespace testsupport
