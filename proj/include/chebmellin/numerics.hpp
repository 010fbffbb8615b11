#pragma once

#include <string>
#include <vector>

#include "chebmellin/bigfloat.hpp"
#include "chebmellin/rational.hpp"
#include "chebmellin/ratpoly.hpp"

namespace chebmellin {

// Principal-branch log Gamma(z); throws PoleError at non-positive integers.
BigComplex log_gamma(const BigComplex& z);
BigComplex gamma(const BigComplex& z);
// Gamma(a) / Gamma(b); zero when b is a pole, PoleError when a is.
BigComplex gamma_ratio(const BigComplex& a, const BigComplex& b);
// Exact Bernoulli number B_k.
Rational bernoulli(unsigned k);

struct ZeroReport {
  std::vector<BigComplex> roots;      // sorted by imaginary part, then real part
  std::vector<BigFloat> residuals;    // |p(r)| / max|coeff| per root
  BigFloat residual_bound;            // max of residuals
  BigFloat max_re_deviation;          // max |Re r - 1/2|
  bool conjugate_pairing_ok = true;
  BigFloat min_gap;                   // +inf for fewer than two roots
  std::vector<Rational> real_roots;   // exact rational roots, with multiplicity
  bool converged = true;
  prec_t precision_bits = 256;
  unsigned iterations = 0;
};

// All complex roots of p. Exact rational roots are extracted and divided out
// first; the rest come from Aberth-Ehrlich iteration started on a circle
// around 1/2 and polished until |p(r)| <= 2^-(bits-16) max|coeff|.
ZeroReport find_roots(const RatPoly& p, prec_t precision_bits = 256);

enum class LineVerdict { critical, real_line, mixed };
const char* verdict_name(LineVerdict v);

struct CriticalLineReport {
  LineVerdict verdict = LineVerdict::critical;
  bool vacuous = false;          // no roots at all
  std::vector<size_t> offenders; // root indices off both lines
};

CriticalLineReport critical_line_report(const ZeroReport& zr, double tol);

}  // namespace chebmellin
