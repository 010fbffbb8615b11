#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebmellin/bigfloat.hpp"
#include "chebmellin/mellin_closed_form.hpp"
#include "chebmellin/rational.hpp"
#include "chebmellin/ratpoly.hpp"

namespace chebmellin {

enum class ChebKind { U, T };

// U_n or T_n in x.
RatPoly chebyshev_poly(ChebKind kind, unsigned n);
// U_n for any integer n, with U_{-k} = -U_{k-2} (so U_{-1} = 0).
RatPoly chebyshev_U_signed(long n);

// p_n(s) by the two-term recursion with p_0 = 1/2, p_1 = 1.
RatPoly p_poly_U(unsigned n);
// p_0 .. p_{n_max}.
std::vector<RatPoly> p_poly_U_table(unsigned n_max);
// Polynomial factor of the first-kind transform by the same mixed recursion,
// before normalization (r_0 = r_1 = 1/4, constant sqrt(pi)).
RatPoly p_poly_T_raw(unsigned n);

MellinClosedForm mellin_U_closed(unsigned n);
// Same, with p_n supplied by the caller (e.g. from p_poly_U_table).
MellinClosedForm mellin_U_closed(unsigned n, RatPoly p);
// poly is monic; the leading coefficient of the raw factor is the multiplier.
MellinClosedForm mellin_T_closed(unsigned n);

// The product of linear factors with the Gamma ratio and constant as printed
// for the first-kind family (n >= 2), for comparison only.
MellinClosedForm mellin_T_printed(unsigned n);

// M_{2k}(s)/M_0(s) or M_{2k+1}(s)/M_0(s+1) from the terminating 3F2 form.
Rational mellin_ratio_prop4(unsigned n, const Rational& s);
// The same ratio from the Gamma-factored closed forms by telescoping.
Rational mellin_ratio_telescoped(unsigned n, const Rational& s);

// M_n(s) through the 3F2 representations indexed by k = floor(n/2).
BigComplex lemma6_eval(unsigned n, const BigComplex& s, prec_t precision_bits = 256);
// M_n(s) through the 3F2 with the 3/4 numerator parameter (variant a) or the
// one with denominator parameter -n (variant b).
enum class UHyperVariant { a, b };
BigComplex u_hypergeometric_eval(unsigned n, const BigComplex& s, UHyperVariant variant, prec_t precision_bits = 256);

// Index-shift identities of the second-kind transforms, compared exactly.
struct IdentityOutcome {
  bool applicable = true;
  bool ok = false;
  std::string detail;
};
IdentityOutcome verify_index_shift_a(unsigned n, unsigned m, const Rational& s);
IdentityOutcome verify_index_shift_b(unsigned n, unsigned k, const Rational& s);

struct GeneratingReport {
  unsigned order = 0;
  double max_coefficient_deviation = 0;  // relative, over k <= order
  std::optional<double> summation_deviation;  // rearranged series vs closed G(t, s)
  std::optional<double> direct_deviation;     // closed G(t, s) vs sum M_k t^k
  unsigned summation_terms = 0;
  double summation_tail = 0;  // magnitude of the last included term
};

// Expands the closed right side of the generating function in powers of t and
// compares coefficient k with M_k(s) (first kind: 2 M_k for k >= 1). When
// `t` is given, also evaluates the rearranged double-sum form at t (second
// kind only) and compares with the closed G(t, s). Throws DivergenceError for
// |t| > 1/8.
GeneratingReport verify_generating_functions(ChebKind family, const Rational& s, unsigned order,
                                             std::optional<Rational> t, prec_t precision_bits = 256);

// Composition, product and u-substitution identities.
IdentityOutcome verify_composition_identities(unsigned m, unsigned n);

// Finite-sum and 2F1 forms of U_n and T_n. The second-kind descending form is
// checked with the (2x)^n prefactor; `printed_prefactor` uses (2x)^{2n}.
IdentityOutcome verify_explicit_sums(unsigned n, bool printed_prefactor = false);

// Exponential-type generating functions of U_n at (x, t); j = 1 is the
// sine/exponential form, j >= 1 the 0F_{j-1} form. Relative deviation.
double exponential_generating_deviation(unsigned j, const Rational& x, const Rational& t, prec_t precision_bits = 256);

// Beta transform of U_n: exact comparison of both sides divided by
// B(r+1, q+1).
IdentityOutcome verify_beta_transform_exact(unsigned n, const Rational& r, const Rational& q);
// Both sides of the Beta transform numerically, left side by quadrature.
double beta_transform_quadrature_deviation(unsigned n, const Rational& r, const Rational& q, prec_t precision_bits = 256);
// The double-sum representation of M_n(s).
BigComplex double_sum_eval(unsigned n, const Rational& s, prec_t precision_bits = 256);

enum class PellKind { pell, mv_b, mv_B };
RatPoly pell_morgan_voyce(PellKind kind, unsigned n);
// Cross-checks against the three-term recurrence / binomial closed forms.
IdentityOutcome verify_pell_morgan_voyce(PellKind kind, unsigned n);

}  // namespace chebmellin
