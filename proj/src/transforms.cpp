#include <algorithm>
#include <cmath>

#include "chebmellin/errors.hpp"
#include "chebmellin/hypergeom.hpp"
#include "chebmellin/numerics.hpp"

namespace chebmellin {

namespace {

struct Spec {
  std::vector<Rational> pre_num;  // Pochhammer (x)_n in the numerator
  std::vector<Rational> pre_den;  // ... and in the denominator
  bool alternating;               // extra (-1)^n
  std::vector<Rational> num;      // numerator parameters besides -n
  std::vector<Rational> den;
};

}  // namespace

std::array<AppendixEntry, 7> appendix_transforms(unsigned n, const Rational& a, const Rational& b,
                                                 const Rational& c, const Rational& d) {
  const Rational N(static_cast<long>(n));
  const Rational one(1);
  const std::array<Spec, 7> specs{{
      {{c - a, d - a}, {c, d}, false, {a, a + b - c - d - N + one}, {a - c - N + one, a - d - N + one}},
      {{a, c + d - a - b}, {c, d}, false, {c - a, d - a}, {one - a - N, c + d - a - b}},
      {{c + d - a - b}, {c}, false, {d - a, d - b}, {d, c + d - a - b}},
      {{a, b}, {c, d}, true, {one - c - N, one - d - N}, {one - a - N, one - b - N}},
      {{d - a, d - b}, {c, d}, true, {one - d - N, a + b - c - d - N + one}, {a - d - N + one, b - d - N + one}},
      {{c - a}, {c}, false, {a, d - b}, {d, a - c - N + one}},
      {{c - a, b}, {c, d}, false, {d - b, one - c - N}, {one - b - N, a - c - N + one}},
  }};

  std::array<AppendixEntry, 7> out;
  // A lower parameter -m with m < n puts a pole inside the summation range;
  // an earlier zero numerator may hide it, but then the identities fail.
  for (const Rational* x : {&c, &d})
    if (x->is_nonpositive_integer() && -*x < N) {
      for (size_t i = 0; i < out.size(); ++i) {
        out[i].index = static_cast<int>(i + 1);
        out[i].reason = "original denominator parameter " + x->str() + " inside the summation range";
      }
      return out;
    }
  for (size_t i = 0; i < specs.size(); ++i) {
    const Spec& sp = specs[i];
    AppendixEntry& e = out[i];
    e.index = static_cast<int>(i + 1);
    Rational pre(sp.alternating && (n % 2 == 1) ? -1 : 1);
    for (const auto& x : sp.pre_num) pre *= pochhammer(x, n);
    Rational den(1);
    for (const auto& x : sp.pre_den) den *= pochhammer(x, n);
    if (den.is_zero()) {
      e.reason = "prefactor pole";
      continue;
    }
    pre /= den;
    RationalHyper h;
    h.numerator.push_back(-N);
    h.numerator.insert(h.numerator.end(), sp.num.begin(), sp.num.end());
    h.denominator = sp.den;
    h.argument = Rational(1);
    // Well-defined only if the finite sum never hits a denominator zero.
    try {
      (void)pfq_terminating_exact(h);
    } catch (const PoleError&) {
      e.reason = "transformed series has a pole before termination";
      continue;
    }
    e.applicable = true;
    e.result = TransformResult{pre, h};
  }
  return out;
}

ThomaeResult thomae_transform(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                              const Rational& e) {
  const Rational w = d + e - a - b - c;
  ThomaeResult r;
  r.w = w;
  r.params = RationalHyper{{d - a, e - a, w}, {w + b, w + c}, Rational(1)};
  r.prefactor_gamma = GammaRatio{Rational(1), {d, e, w}, {a, w + b, w + c}};
  for (const auto& x : {d, e, w})
    if (x.is_nonpositive_integer()) throw PoleError("thomae: prefactor Gamma pole at " + x.str());
  if (a.is_nonpositive_integer())
    throw PoleError("thomae: 1/Gamma(a) vanishes at a = " + a.str() + " (degenerate leading slot)");
  r.prefactor = try_exact(r.prefactor_gamma);
  return r;
}

namespace {

BigComplex gamma_ratio_numeric(const GammaRatio& g, prec_t prec) {
  BigComplex acc(BigFloat(0L, prec));
  for (const auto& x : g.numerator) acc += log_gamma(BigComplex(x, prec));
  for (const auto& x : g.denominator) {
    if (x.is_nonpositive_integer()) return BigComplex(BigFloat(0L, prec));
    acc -= log_gamma(BigComplex(x, prec));
  }
  return exp(acc) * g.coefficient;
}

}  // namespace

ThomaeCheck thomae_check(unsigned n, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                         prec_t bits) {
  ThomaeCheck out;
  const Rational negn(-static_cast<long>(n));
  RationalHyper orig{{negn, a, b}, {c, d}, Rational(1)};
  out.lhs = pfq_terminating_exact(orig);
  for (const Rational* x : {&c, &d})
    if (x->is_nonpositive_integer() && -*x < Rational(static_cast<long>(n))) {
      out.reason = "original denominator parameter inside the summation range";
      return out;
    }
  const std::array<Rational, 3> num{negn, a, b};

  // Candidate leading slots: non-terminating numerator parameters. Prefer a
  // slot whose transformed series terminates (exact comparison), then the
  // largest real part (fastest convergence of the transformed series).
  struct Candidate {
    int slot;
    ThomaeResult tr;
    bool terminates;
  };
  std::vector<Candidate> cands;
  for (int i = 0; i < 3; ++i) {
    if (num[i].is_nonpositive_integer()) continue;
    const Rational& A = num[i];
    const Rational& B = num[(i + 1) % 3];
    const Rational& C = num[(i + 2) % 3];
    try {
      ThomaeResult tr = thomae_transform(A, B, C, c, d);
      bool term = false;
      if (termination_index(tr.params)) {
        try {
          (void)pfq_terminating_exact(tr.params);
          term = true;
        } catch (const PoleError&) {
        }
      }
      if (!term && !(A.sign() > 0)) continue;
      // A vanishing prefactor (Gamma pole in its denominator) is a 0 * inf
      // form unless the transformed series terminates.
      bool den_pole = false;
      for (const auto& x : tr.prefactor_gamma.denominator)
        if (x.is_nonpositive_integer()) den_pole = true;
      if (den_pole) continue;
      cands.push_back({i, std::move(tr), term});
    } catch (const PoleError&) {
    }
  }
  if (cands.empty()) {
    out.reason = "no admissible leading slot";
    return out;
  }
  std::stable_sort(cands.begin(), cands.end(), [&](const Candidate& x, const Candidate& y) {
    bool xe = x.terminates && x.tr.prefactor.has_value();
    bool ye = y.terminates && y.tr.prefactor.has_value();
    if (xe != ye) return xe;
    return num[x.slot] > num[y.slot];
  });
  const Candidate& best = cands.front();
  out.applicable = true;
  out.slot = best.slot;
  if (best.terminates && best.tr.prefactor) {
    out.exact = true;
    out.rhs_exact = *best.tr.prefactor * pfq_terminating_exact(best.tr.params);
    out.ok = *out.rhs_exact == out.lhs;
    return out;
  }
  // The comparison tolerance is 1e-20; 128 bits leaves ample headroom.
  const prec_t wb = std::min<prec_t>(bits, 128);
  BigComplex series = best.terminates ? pfq_numeric(best.tr.params, wb)
                                      : pfq_unit_argument(to_complex(best.tr.params, wb), wb, 1e-26).value;
  BigComplex rhs = gamma_ratio_numeric(best.tr.prefactor_gamma, wb) * series;
  BigComplex lhs(out.lhs, wb);
  BigFloat dev = relative_difference(rhs, lhs);
  out.deviation = dev.to_double();
  out.ok = out.deviation < 1e-20;
  return out;
}

}  // namespace chebmellin
