#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "chebmellin/bigfloat.hpp"
#include "chebmellin/rational.hpp"

namespace chebmellin {

enum class Family { U, T, Gegenbauer, Beta };
const char* family_name(Family f);

struct QuadratureOptions {
  unsigned initial_nodes = 400;
  unsigned max_doublings = 6;
  double target = 0;  // 0: derive from precision_bits (1e-(bits/4), capped at 1e-12)
};

// Tanh-sinh rule on [0, length] for integrands given in terms of the distances
// to both endpoints, so endpoint power singularities keep full relative
// accuracy. Returns the integral estimate; throws ConvergenceError when
// successive halvings never agree to `target`.
std::complex<double> tanh_sinh(const std::function<std::complex<double>(double, double)>& f, double length,
                               double target, const QuadratureOptions& opt = {});

// All moments k = 0..n of the defining integral
//   int_0^{pi/2} cos^{s-1}(th) P_k(cos th) w(th) d th
// with P_k = C_k^lambda (weight sin^{lambda-1/2}), U_k (lambda = 1) or T_k
// (weight sin^2). Odd k use the cos^s * (P_k / cos) split so Re s > -1 is
// allowed for them.
std::vector<std::complex<double>> mellin_moments(Family family, unsigned n, double lambda,
                                                 std::complex<double> s, double target,
                                                 const QuadratureOptions& opt = {});

BigComplex mellin_quadrature(Family family, unsigned n, std::optional<Rational> lambda, const BigComplex& s,
                             prec_t precision_bits = 256, const QuadratureOptions& opt = {});

enum class AuxKind { eq23, eq312, eq51 };

struct AuxParams {
  unsigned n = 0;
  double beta = 0;                 // eq23
  std::complex<double> s{2, 0};    // eq23
  double r = 0, q = 0;             // eq312
  double lambda = 1, x = 0.5;      // eq51
};

// Left-hand integrals of the Beta-type representation of the 3F2 (eq23),
// the Beta transform of U_n (eq312), and the Laplace-type integral of
// C_n^lambda (eq51).
BigComplex auxiliary_quadrature(AuxKind kind, const AuxParams& params, prec_t precision_bits = 256);

double quadrature_target(prec_t precision_bits);

}  // namespace chebmellin
