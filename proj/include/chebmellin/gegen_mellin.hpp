#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebmellin/bigfloat.hpp"
#include "chebmellin/cheb_mellin.hpp"
#include "chebmellin/mellin_closed_form.hpp"
#include "chebmellin/rational.hpp"
#include "chebmellin/ratpoly.hpp"

namespace chebmellin {

// lambda = 3/2 - 2 beta and beta = 3/4 - lambda/2.
struct GegenParams {
  Rational lambda;
  Rational beta;
  static GegenParams from_lambda(const Rational& lambda);
  static GegenParams from_beta(const Rational& beta);
};

// C_n^lambda(x) by the three-term recurrence; lambda > -1/2.
RatPoly gegenbauer_poly(unsigned n, const Rational& lambda);
// C_0 .. C_{n_max}.
std::vector<RatPoly> gegenbauer_table(unsigned n_max, const Rational& lambda);
// P_n = C_n^{1/2}.
RatPoly legendre_poly(unsigned n);

// The rational polynomial factor of M_n^lambda(s): the Gamma-ratio product
// times the terminating 3F2, assembled term by term. Degree floor(n/2).
RatPoly p_poly_gegen(unsigned n, const Rational& lambda);
RatPoly p_poly_beta(unsigned n, const Rational& beta);

// Includes (2 lambda)_n / n! in the multiplier. `with_pochhammer = false`
// gives the form without that factor (kept only to exhibit the discrepancy).
MellinClosedForm mellin_G_closed(unsigned n, const Rational& lambda, bool with_pochhammer = true);
MellinClosedForm mellin_beta_closed(unsigned n, const Rational& beta);

// Residual polynomial of the second-order difference equation for
// p_poly_gegen(n, lambda); identically zero when the equation holds.
RatPoly difference_equation_residual(unsigned n, const Rational& lambda);

// n M_n(s) = 2(lambda+n-1) M_{n-1}(s+1) - (2lambda+n-2) M_{n-2}(s), compared
// exactly after telescoping; n >= 2.
IdentityOutcome verify_gegen_index_recurrence(unsigned n, const Rational& lambda, const Rational& s);

// M_1 / (2 lambda M_0(s+1)) for the closed form with or without the
// (2 lambda)_n / n! factor. 1 when the recurrence base case holds.
Rational gegen_base_ratio(const Rational& lambda, const Rational& s, bool with_pochhammer);

struct Corollary1Outcome {
  bool applicable = true;
  bool ok = false;
  Rational formula;     // elementary/Gamma-ratio evaluation
  Rational polynomial;  // p_poly_beta(n, -m)(s)
  std::string detail;
};
// beta = -m. m = 0 uses the 2F1 / Gauss-summation form, m >= 1 the
// partial-fraction reduction to 2F1(1) values. Rational s.
Corollary1Outcome corollary1_check(unsigned n, unsigned m, const Rational& s);

struct HahnReport {
  std::vector<BigComplex> ratios;
  std::vector<size_t> skipped;  // sample indices too close to a zero of p
  double spread = 0;            // max |r_i - r_0| / |r_0|
};
// Continuous Hahn polynomial at the shifted argument, from its 3F2, divided
// by p_poly_gegen(n, lambda)(s) at each sample.
HahnReport hahn_proportionality(unsigned n, const Rational& lambda, const std::vector<BigComplex>& samples,
                                prec_t precision_bits = 256);

// Generating function of the Gegenbauer transforms: coefficient k of the
// closed right side against M_k^lambda(s). Max relative deviation over k <= order.
double gegen_generating_deviation(const Rational& lambda, const Rational& s, unsigned order,
                                  prec_t precision_bits = 256);

// Identity suite.
IdentityOutcome verify_gegen_expansion_a(unsigned m);
IdentityOutcome verify_gegen_expansion_b(unsigned m);
IdentityOutcome verify_gegen_expansion_c(unsigned m, const Rational& lambda1, const Rational& lambda2);
IdentityOutcome verify_eq52(unsigned n);  // C^2 via U and C^{3/2} via P
IdentityOutcome verify_legendre_identity(unsigned n);

struct LargeLambdaReport {
  Rational deviation_at_1e6;  // max over the sample x grid of |C/C(1) - x^n|
  Rational bound;             // K / lambda with K = 10 n^2 |x|
  double decay_ratio = 0;     // deviation(1e5) / deviation(1e7)
  bool within_bound = false;
  bool decays = false;
};
LargeLambdaReport large_lambda_check(unsigned n, const Rational& x);

// Laplace-type integral of C_n^lambda at x, by quadrature, against the exact
// polynomial value. Relative deviation.
double eq51_deviation(unsigned n, const Rational& lambda, const Rational& x, prec_t precision_bits = 256);

// Beta-type integral representation of the 3F2 in the beta family: left side
// by quadrature, right side by the terminating series. Relative deviation.
double eq23_deviation(unsigned n, const Rational& beta, const Rational& s, prec_t precision_bits = 256);

}  // namespace chebmellin
