// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "chebmellin/cheb_mellin.hpp"
#include "chebmellin/errors.hpp"
#include "chebmellin/formal_series.hpp"
#include "chebmellin/gegen_mellin.hpp"
#include "chebmellin/hypergeom.hpp"
#include "chebmellin/numerics.hpp"
#include "chebmellin/quadrature.hpp"
#include "chebmellin/suites.hpp"

using namespace chebmellin;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

const std::vector<Rational> kLambdas{Rational(1, 2), 1, Rational(3, 2), 2, Rational(7, 3)};
const std::vector<Rational> kBetas{0, -1, -2, Rational(1, 2)};

struct Grid {
  std::string label;
  unsigned n;
  RatPoly p;
};

std::vector<Grid> fe_grid() {
  std::vector<Grid> g;
  auto u = p_poly_U_table(40);
  for (unsigned n = 0; n <= 40; ++n) g.push_back({"U", n, u[n]});
  for (const auto& l : kLambdas)
    for (unsigned n = 0; n <= 20; ++n) g.push_back({"gegenbauer lambda=" + l.str(), n, p_poly_gegen(n, l)});
  for (const auto& b : kBetas)
    for (unsigned n = 0; n <= 20; ++n) g.push_back({"beta beta=" + b.str(), n, p_poly_beta(n, b)});
  return g;
}

Verdict c1_functional_equation() {
  Verdict v;
  auto grid = fe_grid();
  for (const auto& x : grid) {
    const RatPoly want = (x.n / 2) % 2 ? -x.p : x.p;
    if (x.p.degree() != x.n / 2 || !(poly_reflect(x.p) == want)) v.fail(x.label + " n=" + std::to_string(x.n));
  }
  v.note = v.ok ? std::to_string(grid.size()) + " polynomials, coefficient-exact" : v.note;
  return v;
}

Verdict c2_critical_zeros() {
  Verdict v;
  double worst = 0;
  for (const auto& x : fe_grid()) {
    if (x.p.degree() == 0) continue;
    ZeroReport zr = find_roots(x.p, 256);
    const double d = zr.max_re_deviation.to_double();
    worst = std::max(worst, d);
    if (!(d < 1e-20) || !zr.conjugate_pairing_ok || !zr.converged)
      v.fail(x.label + " n=" + std::to_string(x.n) + " dev " + std::to_string(d));
  }
  ZeroReport z4 = find_roots(p_poly_U(4), 256);
  const BigFloat im = BigFloat(2L, 256) / sqrt(BigFloat(5L, 256));
  if (z4.roots.size() != 2) v.fail("p_4 root count");
  for (const auto& r : z4.roots) {
    BigComplex e(BigFloat(Rational(1, 2), 256), r.im().sign() < 0 ? -im : im);
    if (!(abs(r - e).to_double() < 1e-25)) v.fail("p_4 roots differ from 1/2 +- 2i/sqrt5");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max |Re - 1/2| = %.2e", worst);
  if (v.ok) v.note = buf;
  return v;
}

Verdict c3_first_kind_zeros() {
  Verdict v;
  for (unsigned n = 2; n <= 12; ++n) {
    std::vector<Rational> want;
    for (long k = static_cast<long>(n) - 3; k >= 1; k -= 2) want.emplace_back(k);
    want.emplace_back(static_cast<long>(n * n) - 1);
    std::sort(want.begin(), want.end());
    ZeroReport zr = find_roots(mellin_T_closed(n).poly, 256);
    if (zr.real_roots != want || zr.roots.size() != want.size()) v.fail("n=" + std::to_string(n));
  }
  if (v.ok) v.note = "2 <= n <= 12, exact rational roots";
  return v;
}

Verdict c4_exact_values() {
  Verdict v;
  struct K {
    MellinClosedForm f;
    Family fam;
    unsigned n;
    Rational s, val;
  };
  for (const K& k : std::vector<K>{{mellin_U_closed(0), Family::U, 0, 2, Rational(2, 3)},
                                   {mellin_U_closed(1), Family::U, 1, 1, Rational(4, 3)},
                                   {mellin_U_closed(2), Family::U, 2, 2, Rational(6, 7)},
                                   {mellin_T_closed(2), Family::T, 2, 2, Rational(-1, 15)}}) {
    auto e = mellin_eval_exact(k.f, k.s);
    if (!e || *e != k.val) v.fail("closed form " + k.val.str());
    BigComplex q = mellin_quadrature(k.fam, k.n, std::nullopt, BigComplex(k.s, 256), 256);
    if (!(relative_difference(q, BigComplex(k.val, 256)).to_double() < 1e-8)) v.fail("quadrature " + k.val.str());
  }
  if (v.ok) v.note = "2/3, 4/3, 6/7, -1/15 exact; quadrature < 1e-8";
  return v;
}

Verdict c5_index_ratio() {
  Verdict v;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> nu(1, 60), de(1, 12);
  for (int i = 0; i < 10; ++i) {
    Rational s(nu(rng), de(rng));
    for (unsigned n = 0; n <= 15; ++n)
      if (mellin_ratio_prop4(n, s) != mellin_ratio_telescoped(n, s)) v.fail("n=" + std::to_string(n) + " s=" + s.str());
    if (mellin_ratio_telescoped(2, s) != 3 * (2 * s - 1) / (2 * s + 3)) v.fail("M_2/M_0 at s=" + s.str());
  }
  if (v.ok) v.note = "n <= 15 at 10 random s";
  return v;
}

Verdict c6_difference_equation() {
  Verdict v;
  for (const auto& l : kLambdas)
    for (unsigned n = 0; n <= 15; ++n)
      if (!difference_equation_residual(n, l).is_zero()) v.fail("n=" + std::to_string(n) + " lambda=" + l.str());
  if (v.ok) v.note = "80 residuals identically zero";
  return v;
}

Verdict c7_transforms() {
  Verdict v;
  TransformFuzzSummary fz = transform_fuzz(7, 200, 8);
  for (const auto& r : fz.records)
    if (r.applicable && !r.ok) v.fail(r.json());
  std::string cov;
  for (int k = 1; k <= 7; ++k) {
    if (fz.exercised[k] < 50) v.fail("transform " + std::to_string(k) + " exercised " + std::to_string(fz.exercised[k]));
    cov += (k > 1 ? "," : "") + std::to_string(fz.exercised[k]);
  }
  if (v.ok)
    v.note = std::to_string(fz.configurations) + " configurations; uses per transform " + cov + "; Thomae " +
             std::to_string(fz.exercised[8]);
  return v;
}

Verdict c8_generating() {
  Verdict v;
  double worst = 0;
  for (const auto& s : {Rational(2), Rational(7, 2)}) {
    GeneratingReport u = verify_generating_functions(ChebKind::U, s, 12, Rational(1, 16), 256);
    GeneratingReport t = verify_generating_functions(ChebKind::T, s, 12, std::nullopt, 256);
    worst = std::max({worst, u.max_coefficient_deviation, u.summation_deviation.value_or(1), u.direct_deviation.value_or(1),
                      t.max_coefficient_deviation});
    for (const auto& l : kLambdas) worst = std::max(worst, gegen_generating_deviation(l, s, 12, 256));
  }
  for (unsigned j = 1; j <= 3; ++j)
    for (const auto& x : {Rational(1, 2), Rational(-2, 3)}) worst = std::max(worst, exponential_generating_deviation(j, x, Rational(2), 256));
  if (!(worst < 1e-10)) v.fail("max deviation " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof buf, "max relative deviation %.2e", worst);
  if (v.ok) v.note = buf;
  return v;
}

Verdict c9_quadratic_argument() {
  Verdict v;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> nu(-20, 20), de(1, 20);
  int done = 0;
  while (done < 20) {
    Rational a(nu(rng), de(rng)), b(nu(rng), de(rng)), c(nu(rng), de(rng));
    if (c.is_nonpositive_integer()) continue;
    try {
      for (auto var : {QuadraticVariant::single, QuadraticVariant::twice}) {
        const Rational e = var == QuadraticVariant::single ? 1 : 2;
        RationalSeries sa = series_compose_rational({e, {a, b}, {c}}, 16);
        RationalSeries s1 = series_compose_rational({e, {Rational(1), b}, {c}}, 16);
        for (unsigned m = 0; m <= 8; ++m) {
          if (lemma5_coefficient(a, b, c, m, var) != sa.coeff(2 * m)) v.fail("4F3 form at m=" + std::to_string(m));
          if (quadratic_coefficient_3f2(b, c, m, var) != s1.coeff(2 * m)) v.fail("3F2 form at m=" + std::to_string(m));
        }
      }
    } catch (const PoleError&) {
      continue;
    }
    ++done;
  }
  if (v.ok) v.note = "20 random (a,b,c), m <= 8, both prefactors";
  return v;
}

Verdict c10_hahn() {
  Verdict v;
  std::vector<BigComplex> samples;
  for (int k = 0; k < 8; ++k) samples.emplace_back(Rational(2 * k - 5, 4), Rational(k * k, 7), 256);
  double worst = 0;
  for (const auto& l : {Rational(1), Rational(3, 2)})
    for (unsigned n = 0; n <= 8; ++n) {
      HahnReport h = hahn_proportionality(n, l, samples, 256);
      worst = std::max(worst, h.spread);
      if (samples.size() - h.skipped.size() < 2) v.fail("too few samples at n=" + std::to_string(n));
    }
  if (!(worst < 1e-8)) v.fail("spread " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof buf, "max ratio spread %.2e", worst);
  if (v.ok) v.note = buf;
  return v;
}

Verdict from_suite(const std::string& name) {
  Verdict v;
  SuiteRun run = run_suite(name);
  for (const auto& c : run.cases)
    if (!c.pass) v.fail(c.name + ": " + c.detail);
  if (v.ok) v.note = std::to_string(run.cases.size()) + " cases";
  return v;
}

Verdict c12_divergences() {
  Verdict v;
  auto printed = mellin_eval_exact(mellin_T_printed(2), 2);
  auto fixed = mellin_eval_exact(mellin_T_closed(2), 2);
  if (!printed || *printed != Rational(-1, 30)) v.fail("printed first-kind value is not -1/30");
  if (!fixed || *fixed != Rational(-1, 15)) v.fail("corrected first-kind value is not -1/15");
  for (const auto& l : {Rational(1), Rational(3, 2), Rational(7, 3)}) {
    const Rational with = gegen_base_ratio(l, Rational(5, 2), true), without = gegen_base_ratio(l, Rational(5, 2), false);
    if (with != 1 || with / without != 2 * l) v.fail("n=1 recurrence factor at lambda=" + l.str());
  }
  if (v.ok) v.note = "-1/15 vs printed -1/30; missing (2 lambda)_n off by 2 lambda";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "functional equation, exact", 10, c1_functional_equation},
      {2, "critical-line zeros", 60, c2_critical_zeros},
      {3, "first-kind rational zeros", 1, c3_first_kind_zeros},
      {4, "exact values and quadrature", 10, c4_exact_values},
      {5, "index ratio vs telescoped closed forms", 5, c5_index_ratio},
      {6, "difference equation residual", 10, c6_difference_equation},
      {7, "appendix and Thomae transforms", 30, c7_transforms},
      {8, "generating functions", 60, c8_generating},
      {9, "quadratic-argument coefficient formulas", 10, c9_quadratic_argument},
      {10, "continuous Hahn proportionality", 30, c10_hahn},
      {11, "identity suite", 30, [] { return from_suite("identities"); }},
      {12, "expected divergences", 5, c12_divergences},
      {13, "verify --suite all", 300, [] { return from_suite("all"); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.ok && dt > c.budget_s) v.fail("over time budget");
    if (!v.ok) ++failed;
    std::printf("criterion %2d %s: %s (%.2f s of %.0f s) %s\n", c.id, v.ok ? "PASS" : "FAIL", c.title, dt, c.budget_s,
                v.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
