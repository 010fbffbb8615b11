#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chebmellin/bigfloat.hpp"
#include "chebmellin/gamma_ratio.hpp"
#include "chebmellin/rational.hpp"

namespace chebmellin {

// pFq(numerator; denominator; argument).
template <class T>
struct HyperSeries {
  std::vector<T> numerator;
  std::vector<T> denominator;
  T argument;
};

using RationalHyper = HyperSeries<Rational>;
using ComplexHyper = HyperSeries<BigComplex>;

// Smallest n such that -n is a numerator parameter.
std::optional<unsigned> termination_index(const RationalHyper& h);
std::optional<unsigned> termination_index(const ComplexHyper& h);

ComplexHyper to_complex(const RationalHyper& h, prec_t prec);

// Exact finite sum of a terminating series with rational data. Throws
// PoleError when a denominator Pochhammer vanishes before termination.
Rational pfq_terminating_exact(const RationalHyper& h);

// Terminating series, or |argument| < 1. Relative error <= 2^-(bits-8).
// Throws DivergenceError outside that domain.
BigComplex pfq_numeric(const ComplexHyper& h, prec_t precision_bits = 256);
BigComplex pfq_numeric(const RationalHyper& h, prec_t precision_bits = 256);

struct UnitArgumentSum {
  BigComplex value;
  BigFloat error_estimate;
};

// Non-terminating (q+1)Fq at argument 1 with Re(sum b - sum a) > 0, by
// Richardson extrapolation of partial sums (the tail has an expansion in
// N^{-excess-i}).
// Stops once successive extrapolants agree to `target` relative (0: to the
// working precision).
UnitArgumentSum pfq_unit_argument(const ComplexHyper& h, prec_t precision_bits = 256, double target = 0);

// 2F1(-n, b; c; 1) = (c-b)_n / (c)_n.
Rational chu_vandermonde(unsigned n, const Rational& b, const Rational& c);

struct TransformResult {
  Rational prefactor;
  RationalHyper params;
};

struct AppendixEntry {
  int index = 0;  // 1..7
  bool applicable = false;
  std::string reason;
  std::optional<TransformResult> result;
};

// The seven transformations of 3F2(-n, a, b; c, d; 1).
std::array<AppendixEntry, 7> appendix_transforms(unsigned n, const Rational& a, const Rational& b,
                                                 const Rational& c, const Rational& d);

struct ThomaeResult {
  RationalHyper params;       // (d-a, e-a, w; w+b, w+c)
  Rational w;
  GammaRatio prefactor_gamma; // G(d)G(e)G(w) / (G(a)G(w+b)G(w+c))
  std::optional<Rational> prefactor;  // when it telescopes to a rational
};

// Literal parameter map of Thomae's identity for 3F2(a, b, c; d, e; 1).
// Throws PoleError when the prefactor has a Gamma pole or vanishes
// identically (a a non-positive integer).
ThomaeResult thomae_transform(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                              const Rational& e);

struct ThomaeCheck {
  bool applicable = false;
  bool exact = false;  // compared as Rationals
  bool ok = false;
  int slot = -1;       // which numerator parameter took Thomae's leading role
  Rational lhs;
  std::optional<Rational> rhs_exact;
  double deviation = 0;  // relative, numeric path
  std::string reason;
};

// Checks Thomae's identity on the terminating 3F2(-n, a, b; c, d; 1), putting
// a non-terminating numerator parameter into the leading slot.
ThomaeCheck thomae_check(unsigned n, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                         prec_t precision_bits = 256);

enum class QuadraticVariant { single, twice };  // (1+t^2)^{-1} or (1+t^2)^{-2}

// t^{2m} coefficient of (1+t^2)^{-e} 2F1(a,b;c;4t^2/(1+t^2)^2) via the 4F3(1)
// formula.
Rational lemma5_coefficient(const Rational& a, const Rational& b, const Rational& c, unsigned m,
                            QuadraticVariant variant);
// The a = 1 case through the 3F2(1) form.
Rational quadratic_coefficient_3f2(const Rational& b, const Rational& c, unsigned m, QuadraticVariant variant);

}  // namespace chebmellin
