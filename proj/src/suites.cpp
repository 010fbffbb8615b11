#include "chebmellin/suites.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <random>
#include <sstream>

#include "chebmellin/cheb_mellin.hpp"
#include "chebmellin/errors.hpp"
#include "chebmellin/formal_series.hpp"
#include "chebmellin/gegen_mellin.hpp"
#include "chebmellin/hypergeom.hpp"
#include "chebmellin/numerics.hpp"
#include "chebmellin/quadrature.hpp"

namespace chebmellin {

using ordered_json = nlohmann::ordered_json;

std::string to_json_line(const CaseResult& c) {
  ordered_json j;
  j["suite"] = c.suite;
  j["case"] = c.name;
  j["status"] = c.pass ? "pass" : "fail";
  j["detail"] = c.detail;
  return j.dump();
}

unsigned SuiteRun::failures() const {
  return static_cast<unsigned>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"functional-eq", "recursion",     "closed-forms",
                                              "transforms",    "generating",    "quadrature",
                                              "difference-eq", "hahn",          "identities"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& v = suite_names();
  return name == "all" || std::find(v.begin(), v.end(), name) != v.end();
}

namespace {

std::string sci(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

using Outcome = std::pair<bool, std::string>;

class Recorder {
 public:
  Recorder(std::string suite, SuiteRun& run, const std::function<void(const CaseResult&)>& sink)
      : suite_(std::move(suite)), run_(run), sink_(sink) {}

  void add(std::string name, bool pass, std::string detail) {
    CaseResult c{suite_, std::move(name), pass, std::move(detail)};
    if (sink_) sink_(c);
    run_.cases.push_back(std::move(c));
  }

  // Runs f, recording an escaped exception as a failure.
  template <class F>
  void check(std::string name, F&& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    add(std::move(name), o.first, std::move(o.second));
  }

 private:
  std::string suite_;
  SuiteRun& run_;
  const std::function<void(const CaseResult&)>& sink_;
};

unsigned cap(const SuiteConfig& cfg, unsigned dflt) { return cfg.max_n ? *cfg.max_n : dflt; }

std::vector<Rational> lambda_grid(const SuiteConfig& cfg, std::vector<Rational> dflt) {
  return cfg.lambda_grid ? *cfg.lambda_grid : dflt;
}

const std::vector<Rational> kLambdaGrid{Rational(1, 2), 1, Rational(3, 2), 2, Rational(7, 3)};
const std::vector<Rational> kBetaGrid{0, -1, -2, Rational(1, 2)};

// Threshold for comparing two independent high-precision evaluations.
double numeric_tol(prec_t bits) { return std::ldexp(1.0, -static_cast<int>(bits / 2)); }

double rel(const BigComplex& a, const BigComplex& b) { return relative_difference(a, b).to_double(); }

std::string tag(const char* what, unsigned n, const std::optional<Rational>& p = std::nullopt,
                const char* pname = "lambda") {
  std::string s = std::string(what) + " n=" + std::to_string(n);
  if (p) s += std::string(" ") + pname + "=" + p->str();
  return s;
}

Rational random_rational(std::mt19937_64& rng, int num_lo, int num_hi, int den_hi) {
  std::uniform_int_distribution<int> nu(num_lo, num_hi), de(1, den_hi);
  int a = nu(rng);
  int b = de(rng);
  return Rational(a, b);
}

// ---------------------------------------------------------------- functional-eq

Outcome functional_equation(const RatPoly& p, unsigned n) {
  const RatPoly expected = (n / 2) % 2 ? -p : p;
  const bool deg_ok = p.degree() == n / 2;
  const bool fe_ok = poly_reflect(p) == expected;
  return {deg_ok && fe_ok, "degree=" + std::to_string(p.degree()) + (fe_ok ? " reflection exact" : " reflection mismatch")};
}

Outcome critical_zeros(const RatPoly& p, const SuiteConfig& cfg) {
  ZeroReport zr = find_roots(p, cfg.precision);
  CriticalLineReport rep = critical_line_report(zr, cfg.tol);
  const double dev = zr.roots.empty() ? 0.0 : zr.max_re_deviation.to_double();
  const bool ok = zr.converged && zr.conjugate_pairing_ok && rep.verdict == LineVerdict::critical && dev < cfg.tol;
  std::string d = "roots=" + std::to_string(zr.roots.size()) + " verdict=" + verdict_name(rep.verdict) +
                  " max_re_dev=" + sci(dev) + " residual=" + sci(zr.roots.empty() ? 0.0 : zr.residual_bound.to_double());
  if (!zr.conjugate_pairing_ok) d += " conjugate-pairing-broken";
  if (rep.vacuous) d += " (vacuous)";
  return {ok, d};
}

void suite_functional_eq(Recorder& r, const SuiteConfig& cfg) {
  const unsigned nu = cap(cfg, 40), ng = cap(cfg, 20);
  const auto table = p_poly_U_table(nu);
  for (unsigned n = 0; n <= nu; ++n) {
    r.check(tag("U fe", n), [&] { return functional_equation(table[n], n); });
    r.check(tag("U zeros", n), [&] { return critical_zeros(table[n], cfg); });
  }
  for (const auto& lam : lambda_grid(cfg, kLambdaGrid))
    for (unsigned n = 0; n <= ng; ++n) {
      RatPoly p;
      r.check(tag("gegenbauer fe", n, lam), [&] {
        p = p_poly_gegen(n, lam);
        return functional_equation(p, n);
      });
      r.check(tag("gegenbauer zeros", n, lam), [&] { return critical_zeros(p, cfg); });
    }
  for (const auto& beta : kBetaGrid)
    for (unsigned n = 0; n <= ng; ++n) {
      RatPoly p;
      r.check(tag("beta fe", n, beta, "beta"), [&] {
        p = p_poly_beta(n, beta);
        return functional_equation(p, n);
      });
      r.check(tag("beta zeros", n, beta, "beta"), [&] { return critical_zeros(p, cfg); });
    }
  if (nu >= 4)
    r.check("U n=4 roots 1/2 +- 2i/sqrt(5)", [&] {
      ZeroReport zr = find_roots(table[4], cfg.precision);
      if (zr.roots.size() != 2) return Outcome{false, "root count " + std::to_string(zr.roots.size())};
      const prec_t b = cfg.precision;
      BigFloat im = BigFloat(2L, b) / sqrt(BigFloat(5L, b));
      double worst = 0;
      for (const auto& z : zr.roots) {
        BigComplex expect(BigFloat(Rational(1, 2), b), z.im().sign() < 0 ? -im : im);
        worst = std::max(worst, abs(z - expect).to_double());
      }
      return Outcome{worst < 1e-25, "max |root - expected| = " + sci(worst)};
    });
}

// ---------------------------------------------------------------- recursion

Outcome mixed_recursion(const MellinClosedForm& fn, const MellinClosedForm& fn1, const MellinClosedForm& fn2,
                        const Rational& s) {
  // M_n(s) = 2 M_{n-1}(s+1) - M_{n-2}(s), divided through by M_{n-2}(s).
  auto a = mellin_ratio_exact(fn, s, fn2, s);
  auto b = mellin_ratio_exact(fn1, s + 1, fn2, s);
  if (!a || !b) return {false, "ratio did not telescope"};
  const Rational rhs = 2 * *b - 1;
  return {*a == rhs, "M_n/M_{n-2}=" + a->str() + " rhs=" + rhs.str()};
}

std::vector<Rational> expected_t_roots(unsigned n) {
  std::vector<Rational> v;
  for (long k = static_cast<long>(n) - 3; k >= 1; k -= 2) v.emplace_back(k);
  v.emplace_back(static_cast<long>(n) * static_cast<long>(n) - 1);
  std::sort(v.begin(), v.end());
  return v;
}

std::string join(const std::vector<Rational>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "}";
}

void suite_recursion(Recorder& r, const SuiteConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const unsigned nmax = cap(cfg, 15);
  // Non-integer s keeps clear of the first-kind rational zeros.
  const std::vector<Rational> svals{Rational(5, 2), Rational(7, 3), Rational(13, 5)};

  std::vector<MellinClosedForm> U, T;
  const auto table = p_poly_U_table(nmax);
  for (unsigned n = 0; n <= nmax; ++n) U.push_back(mellin_U_closed(n, table[n]));
  for (unsigned n = 0; n <= std::min(nmax, 12u); ++n) T.push_back(mellin_T_closed(n));

  for (unsigned n = 2; n <= nmax; ++n)
    for (const auto& s : svals) r.check(tag("U mixed recursion", n) + " s=" + s.str(), [&] {
        return mixed_recursion(U[n], U[n - 1], U[n - 2], s);
      });
  for (unsigned n = 2; n < T.size(); ++n)
    for (const auto& s : svals) r.check(tag("T mixed recursion", n) + " s=" + s.str(), [&] {
        return mixed_recursion(T[n], T[n - 1], T[n - 2], s);
      });

  for (unsigned n = 2; n < T.size(); ++n)
    r.check(tag("T rational zeros", n), [&] {
      ZeroReport zr = find_roots(T[n].poly, cfg.precision);
      std::vector<Rational> got = zr.real_roots;
      std::sort(got.begin(), got.end());
      const auto want = expected_t_roots(n);
      const bool ok = got == want && zr.roots.size() == T[n].poly.degree();
      return Outcome{ok, "roots=" + join(got) + " expected=" + join(want)};
    });

  // Index-ratio form against telescoped closed forms at random rational s.
  std::vector<Rational> rs;
  while (rs.size() < 10) {
    Rational s = random_rational(rng, 1, 60, 12);
    if (std::find(rs.begin(), rs.end(), s) == rs.end()) rs.push_back(s);
  }
  for (unsigned n = 0; n <= nmax; ++n)
    r.check(tag("ratio form vs telescoped", n), [&] {
      for (const auto& s : rs) {
        Rational a = mellin_ratio_prop4(n, s), b = mellin_ratio_telescoped(n, s);
        if (a != b) return Outcome{false, "s=" + s.str() + " ratio=" + a.str() + " telescoped=" + b.str()};
      }
      return Outcome{true, "s in " + join(rs)};
    });
  if (nmax >= 2)
    r.check("M_2/M_0 = 3(2s-1)/(2s+3)", [&] {
      for (const auto& s : rs) {
        const Rational want = 3 * (2 * s - 1) / (2 * s + 3);
        if (mellin_ratio_telescoped(2, s) != want) return Outcome{false, "s=" + s.str()};
      }
      return Outcome{true, std::to_string(rs.size()) + " random s"};
    });

  for (const auto& lam : lambda_grid(cfg, kLambdaGrid))
    for (unsigned n = 2; n <= nmax; ++n)
      r.check(tag("gegenbauer recurrence", n, lam), [&] {
        for (const auto& s : {Rational(5, 3), Rational(9, 2)}) {
          IdentityOutcome o = verify_gegen_index_recurrence(n, lam, s);
          if (!o.applicable) continue;
          if (!o.ok) return Outcome{false, "s=" + s.str() + " " + o.detail};
        }
        return Outcome{true, "exact at s=5/3, 9/2"};
      });

  for (unsigned n = 0; n <= std::min(nmax, 10u); ++n)
    r.check(tag("lambda=1 reduces to U", n), [&] {
      MellinClosedForm g = mellin_G_closed(n, 1);
      const MellinClosedForm& u = U[n];
      const Rational c = g.poly.leading() / u.poly.leading();
      const bool shape = c.sign() > 0 && g.poly == u.poly * c && g.gamma_num_offset == u.gamma_num_offset &&
                         g.gamma_den_offset == u.gamma_den_offset;
      auto ratio = mellin_ratio_exact(g, 3, u, 3);
      const bool value = ratio && *ratio == 1;
      return Outcome{shape && value, "poly ratio " + c.str() + (value ? ", values equal" : ", values differ")};
    });
}

// ---------------------------------------------------------------- closed-forms

void suite_closed_forms(Recorder& r, const SuiteConfig& cfg) {
  const prec_t bits = cfg.precision;
  const unsigned nmax = cap(cfg, 12);
  struct Known {
    const char* name;
    MellinClosedForm f;
    Family family;
    unsigned n;
    Rational s, value;
  };
  std::vector<Known> known;
  if (nmax >= 2) {
    known.push_back({"M_0(2) = 2/3", mellin_U_closed(0), Family::U, 0, 2, Rational(2, 3)});
    known.push_back({"M_1(1) = 4/3", mellin_U_closed(1), Family::U, 1, 1, Rational(4, 3)});
    known.push_back({"M_2(2) = 6/7", mellin_U_closed(2), Family::U, 2, 2, Rational(6, 7)});
    known.push_back({"M_2^T(2) = -1/15", mellin_T_closed(2), Family::T, 2, 2, Rational(-1, 15)});
  }
  for (const auto& k : known) {
    r.check(std::string("exact ") + k.name, [&] {
      auto v = mellin_eval_exact(k.f, k.s);
      return Outcome{v && *v == k.value, v ? "closed form " + v->str() : "did not telescope"};
    });
    r.check(std::string("quadrature ") + k.name, [&] {
      BigComplex q = mellin_quadrature(k.family, k.n, std::nullopt, BigComplex(k.s, bits), bits);
      double d = rel(q, BigComplex(k.value, bits));
      return Outcome{d < 1e-8, "rel_diff=" + sci(d)};
    });
  }

  const std::vector<BigComplex> svals{BigComplex(Rational(2), bits), BigComplex(Rational(7, 2), bits),
                                      BigComplex(Rational(1), Rational(1), bits)};
  const double tol = numeric_tol(bits);
  for (unsigned n = 0; n <= nmax; ++n) {
    const MellinClosedForm f = mellin_U_closed(n);
    r.check(tag("3F2 forms vs closed", n), [&] {
      double worst = 0;
      for (const auto& s : svals) {
        BigComplex ref = mellin_eval(f, s, bits);
        worst = std::max({worst, rel(lemma6_eval(n, s, bits), ref), rel(u_hypergeometric_eval(n, s, UHyperVariant::a, bits), ref),
                          rel(u_hypergeometric_eval(n, s, UHyperVariant::b, bits), ref)});
      }
      return Outcome{worst < tol, "max rel_diff=" + sci(worst)};
    });
  }

  for (unsigned n = 1; n <= std::min(nmax, 10u); ++n)
    for (unsigned m = 0; m <= 3; ++m)
      r.check("beta=-" + std::to_string(m) + " elementary form n=" + std::to_string(n), [&] {
        std::string last;
        for (const auto& s : {Rational(3), Rational(7, 3), Rational(11, 5)}) {
          Corollary1Outcome o = corollary1_check(n, m, s);
          if (!o.applicable) continue;
          if (!o.ok) return Outcome{false, "s=" + s.str() + " " + o.detail};
          last = o.formula.str();
        }
        return Outcome{true, "at s=11/5: " + last};
      });

  for (const auto& beta : kBetaGrid)
    for (unsigned n = 0; n <= nmax; ++n)
      r.check(tag("beta/lambda consistency", n, beta, "beta"), [&] {
        MellinClosedForm b = mellin_beta_closed(n, beta);
        MellinClosedForm g = mellin_G_closed(n, GegenParams::from_beta(beta).lambda);
        const bool ok = b.poly == g.poly && b.multiplier == g.multiplier && b.gamma_den_offset == g.gamma_den_offset &&
                        b.poly == p_poly_beta(n, beta);
        return Outcome{ok, "lambda=" + g.lambda->str()};
      });

  // Expected divergences: both printed forms must disagree with the corrected ones.
  if (nmax >= 2)
    r.check("expected-divergence printed first-kind constant", [&] {
      auto printed = mellin_eval_exact(mellin_T_printed(2), 2);
      auto fixed = mellin_eval_exact(mellin_T_closed(2), 2);
      const bool ok = printed && fixed && *printed == Rational(-1, 30) && *fixed == Rational(-1, 15);
      return Outcome{ok, "printed=" + (printed ? printed->str() : "?") + " corrected=" + (fixed ? fixed->str() : "?")};
    });
  for (const auto& lam : lambda_grid(cfg, kLambdaGrid))
    r.check("expected-divergence gegenbauer without (2lambda)_n lambda=" + lam.str(), [&] {
      const Rational s(5, 2);
      Rational with = gegen_base_ratio(lam, s, true);
      Rational without = gegen_base_ratio(lam, s, false);
      // Degenerate at lambda = 1/2, where (2 lambda)_1 = 1.
      const bool ok = with == 1 && with / without == 2 * lam;
      return Outcome{ok, "n=1 ratio with factor " + with.str() + ", without " + without.str()};
    });
}

// ---------------------------------------------------------------- transforms

void suite_transforms(Recorder& r, const SuiteConfig& cfg) {
  const unsigned nmax = cap(cfg, 8);
  TransformFuzzSummary fz = transform_fuzz(cfg.seed, 200, nmax);
  for (size_t i = 0; i < fz.records.size(); ++i) {
    const auto& rec = fz.records[i];
    const std::string name = "config " + std::to_string(i / 8) + " " +
                             (rec.transform == 8 ? std::string("thomae") : "transform " + std::to_string(rec.transform));
    r.add(name, !rec.applicable || rec.ok, rec.json());
  }
  for (int k = 1; k <= 8; ++k) {
    const unsigned need = 50;
    r.add(k == 8 ? "coverage thomae" : "coverage transform " + std::to_string(k), fz.exercised[k] >= need,
          "exercised " + std::to_string(fz.exercised[k]) + " of " + std::to_string(fz.configurations) +
              " configurations (" + std::to_string(fz.resampled) + " resampled)");
  }

  // Coefficient formulas of (1+t^2)^{-e} 2F1(4t^2/(1+t^2)^2) against substitution.
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const unsigned mmax = std::min(nmax, 8u);
  int triples = 0;
  while (triples < 20) {
    Rational a = random_rational(rng, -20, 20, 20), b = random_rational(rng, -20, 20, 20),
             c = random_rational(rng, -20, 20, 20);
    if (c.is_nonpositive_integer()) continue;
    // Resample when the closed coefficient formula has a parameter pole.
    try {
      for (unsigned m = 0; m <= mmax; ++m)
        for (auto v : {QuadraticVariant::single, QuadraticVariant::twice}) {
          (void)lemma5_coefficient(a, b, c, m, v);
          (void)quadratic_coefficient_3f2(b, c, m, v);
        }
    } catch (const PoleError&) {
      continue;
    }
    ++triples;
    const std::string params = "(a,b,c)=(" + a.str() + "," + b.str() + "," + c.str() + ")";
    for (auto v : {QuadraticVariant::single, QuadraticVariant::twice}) {
      const Rational e = v == QuadraticVariant::single ? 1 : 2;
      const char* vn = v == QuadraticVariant::single ? "e=1" : "e=2";
      r.check("quadratic-argument coefficients " + params + " " + vn, [&] {
        RationalSeries sa = series_compose_rational({e, {a, b}, {c}}, 2 * mmax);
        RationalSeries s1 = series_compose_rational({e, {Rational(1), b}, {c}}, 2 * mmax);
        for (unsigned m = 0; m <= mmax; ++m) {
          if (lemma5_coefficient(a, b, c, m, v) != sa.coeff(2 * m)) return Outcome{false, "4F3 form differs at m=" + std::to_string(m)};
          if (quadratic_coefficient_3f2(b, c, m, v) != s1.coeff(2 * m))
            return Outcome{false, "3F2 form differs at m=" + std::to_string(m)};
        }
        return Outcome{true, "m<=" + std::to_string(mmax) + " exact"};
      });
    }
  }

  for (unsigned n = 0; n <= std::min(nmax, 10u); ++n)
    r.check("chu-vandermonde n=" + std::to_string(n), [&] {
      for (int bn = -7; bn <= 7; bn += 2)
        for (int cn = 1; cn <= 9; cn += 2) {
          Rational b(bn, 3), c(cn, 2);
          if (chu_vandermonde(n, b, c) != pfq_terminating_exact({{-Rational(n), b}, {c}, Rational(1)}))
            return Outcome{false, "b=" + b.str() + " c=" + c.str()};
        }
      return Outcome{true, "40 parameter pairs"};
    });
}

// ---------------------------------------------------------------- generating

void suite_generating(Recorder& r, const SuiteConfig& cfg) {
  const prec_t bits = cfg.precision;
  const unsigned order = std::min(cap(cfg, 12), 12u);
  const double tol = 1e-10;
  for (const auto& s : {Rational(2), Rational(7, 2)}) {
    r.check("second kind s=" + s.str(), [&] {
      GeneratingReport g = verify_generating_functions(ChebKind::U, s, order, Rational(1, 16), bits);
      const double sd = g.summation_deviation.value_or(1), dd = g.direct_deviation.value_or(1);
      const bool ok = g.max_coefficient_deviation < tol && sd < tol && dd < tol;
      return Outcome{ok, "order=" + std::to_string(order) + " coeff=" + sci(g.max_coefficient_deviation) +
                             " rearranged(t=1/16, " + std::to_string(g.summation_terms) + " terms)=" + sci(sd) +
                             " direct=" + sci(dd)};
    });
    r.check("first kind s=" + s.str(), [&] {
      GeneratingReport g = verify_generating_functions(ChebKind::T, s, order, std::nullopt, bits);
      return Outcome{g.max_coefficient_deviation < tol, "coeff=" + sci(g.max_coefficient_deviation)};
    });
    for (const auto& lam : lambda_grid(cfg, kLambdaGrid))
      r.check("gegenbauer s=" + s.str() + " lambda=" + lam.str(), [&] {
        double d = gegen_generating_deviation(lam, s, order, bits);
        return Outcome{d < tol, "coeff=" + sci(d)};
      });
  }
  for (unsigned j = 1; j <= 3; ++j)
    for (const auto& x : {Rational(1, 2), Rational(3, 10), Rational(-2, 3)})
      for (const auto& t : {Rational(1, 3), Rational(2)})
        r.check("exponential-type j=" + std::to_string(j) + " x=" + x.str() + " t=" + t.str(), [&] {
          double d = exponential_generating_deviation(j, x, t, bits);
          return Outcome{d < tol, "rel_diff=" + sci(d)};
        });
}

// ---------------------------------------------------------------- quadrature

void suite_quadrature(Recorder& r, const SuiteConfig& cfg) {
  const prec_t bits = cfg.precision;
  const std::vector<BigComplex> svals{BigComplex(Rational(3, 4), bits), BigComplex(Rational(2), bits),
                                      BigComplex(Rational(7, 2), bits), BigComplex(Rational(1), Rational(1), bits)};
  const std::vector<std::string> snames{"3/4", "2", "7/2", "1+i"};
  auto run = [&](const std::string& label, const MellinClosedForm& f, Family fam, std::optional<Rational> lam) {
    r.check(label, [&] {
      double worst = 0;
      for (const auto& s : svals)
        worst = std::max(worst, rel(mellin_quadrature(fam, f.n, lam, s, bits), mellin_eval(f, s, bits)));
      return Outcome{worst < 1e-8, "max rel_diff=" + sci(worst) + " over s in {3/4,2,7/2,1+i}"};
    });
  };
  for (unsigned n = 0; n <= cap(cfg, 10); ++n) run(tag("U", n), mellin_U_closed(n), Family::U, std::nullopt);
  for (unsigned n = 0; n <= cap(cfg, 8); ++n) run(tag("T", n), mellin_T_closed(n), Family::T, std::nullopt);
  for (const auto& lam : lambda_grid(cfg, {Rational(1, 2), 1, Rational(3, 2), Rational(7, 3)}))
    for (unsigned n = 0; n <= cap(cfg, 8); ++n)
      run(tag("gegenbauer", n, lam), mellin_G_closed(n, lam), Family::Gegenbauer, lam);
  for (const auto& beta : {Rational(0), Rational(-1)})
    for (unsigned n = 0; n <= cap(cfg, 6); ++n)
      run(tag("beta", n, beta, "beta"), mellin_beta_closed(n, beta), Family::Beta, GegenParams::from_beta(beta).lambda);
}

// ---------------------------------------------------------------- difference-eq

void suite_difference_eq(Recorder& r, const SuiteConfig& cfg) {
  for (const auto& lam : lambda_grid(cfg, kLambdaGrid))
    for (unsigned n = 0; n <= cap(cfg, 15); ++n)
      r.check(tag("residual", n, lam), [&] {
        RatPoly res = difference_equation_residual(n, lam);
        return Outcome{res.is_zero(), res.is_zero() ? "zero polynomial" : "residual " + res.str()};
      });
}

// ---------------------------------------------------------------- hahn

void suite_hahn(Recorder& r, const SuiteConfig& cfg) {
  const prec_t bits = cfg.precision;
  std::vector<BigComplex> samples;
  for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{Rational(3, 10), 0},
                                                                {Rational(17, 10), 0},
                                                                {2, 1},
                                                                {Rational(1, 2), Rational(5, 2)},
                                                                {Rational(-6, 5), Rational(7, 10)},
                                                                {Rational(31, 10), Rational(-2, 5)},
                                                                {0, Rational(1, 4)},
                                                                {5, 3}})
    samples.emplace_back(a, b, bits);
  for (const auto& lam : lambda_grid(cfg, {1, Rational(3, 2)}))
    for (unsigned n = 0; n <= cap(cfg, 8); ++n)
      r.check(tag("proportionality", n, lam), [&] {
        HahnReport h = hahn_proportionality(n, lam, samples, bits);
        const size_t used = samples.size() - h.skipped.size();
        return Outcome{h.spread < 1e-8 && used >= 2,
                       "spread=" + sci(h.spread) + " samples=" + std::to_string(used)};
      });
}

// ---------------------------------------------------------------- identities

Outcome from(const IdentityOutcome& o) { return {o.ok, o.detail}; }

void suite_identities(Recorder& r, const SuiteConfig& cfg) {
  const prec_t bits = cfg.precision;
  const unsigned nmax = cap(cfg, 12);

  for (unsigned m = 1; m <= nmax; ++m)
    for (unsigned n = 1; n <= nmax; ++n)
      r.check("composition m=" + std::to_string(m) + " n=" + std::to_string(n),
              [&] { return from(verify_composition_identities(m, n)); });

  for (unsigned n = 0; n <= nmax; ++n)
    for (const auto& s : {Rational(3), Rational(7, 2)}) {
      r.check(tag("index shift (a)", n) + " s=" + s.str(), [&] {
        for (unsigned m = 0; m <= 4; ++m) {
          IdentityOutcome o = verify_index_shift_a(n, m, s);
          if (o.applicable && !o.ok) return Outcome{false, "m=" + std::to_string(m) + " " + o.detail};
        }
        return Outcome{true, "m<=4 exact"};
      });
      r.check(tag("index shift (b)", n) + " s=" + s.str(), [&] {
        for (unsigned k = 0; 2 * k <= n; ++k) {
          IdentityOutcome o = verify_index_shift_b(n, k, s);
          if (o.applicable && !o.ok) return Outcome{false, "k=" + std::to_string(k) + " " + o.detail};
        }
        return Outcome{true, "2k<=n exact"};
      });
    }

  for (unsigned n = 0; n <= nmax; ++n)
    r.check(tag("explicit sums and 2F1 forms", n), [&] { return from(verify_explicit_sums(n)); });
  for (unsigned n = 2; n <= std::min(nmax, 4u); ++n)
    r.check(tag("expected-divergence descending form with (2x)^{2n}", n), [&] {
      IdentityOutcome o = verify_explicit_sums(n, true);
      return Outcome{!o.ok, o.ok ? "printed prefactor unexpectedly holds" : "printed prefactor fails as expected"};
    });

  for (unsigned n = 0; n <= nmax; ++n)
    for (auto [rr, q] : std::vector<std::pair<Rational, Rational>>{{Rational(1, 2), Rational(1, 3)}, {2, Rational(-1, 4)}}) {
      const std::string pq = " r=" + rr.str() + " q=" + q.str();
      r.check(tag("beta transform exact", n) + pq, [&] { return from(verify_beta_transform_exact(n, rr, q)); });
      if (n <= 6)
        r.check(tag("beta transform quadrature", n) + pq, [&] {
          double d = beta_transform_quadrature_deviation(n, rr, q, bits);
          return Outcome{d < 1e-8, "rel_diff=" + sci(d)};
        });
    }

  for (unsigned n = 0; n <= nmax; ++n)
    r.check(tag("double-sum form", n), [&] {
      double worst = 0;
      for (const auto& s : {Rational(2), Rational(7, 2)})
        worst = std::max(worst, rel(double_sum_eval(n, s, bits), mellin_eval(mellin_U_closed(n), BigComplex(s, bits), bits)));
      return Outcome{worst < 1e-8, "max rel_diff=" + sci(worst)};
    });

  for (unsigned m = 0; m <= nmax; ++m) {
    r.check("gegenbauer expansion (a) m=" + std::to_string(m), [&] { return from(verify_gegen_expansion_a(m)); });
    r.check("gegenbauer expansion (b) m=" + std::to_string(m), [&] { return from(verify_gegen_expansion_b(m)); });
    for (auto [l1, l2] : std::vector<std::pair<Rational, Rational>>{
             {Rational(1, 2), Rational(1, 2)}, {Rational(7, 3), Rational(3, 2)}, {1, 2}})
      r.check("connection m=" + std::to_string(m) + " lambda1=" + l1.str() + " lambda2=" + l2.str(),
              [&] { return from(verify_gegen_expansion_c(m, l1, l2)); });
    r.check("C^2 and C^{3/2} reductions n=" + std::to_string(m), [&] { return from(verify_eq52(m)); });
    r.check("legendre identity n=" + std::to_string(m), [&] { return from(verify_legendre_identity(m)); });
  }

  for (unsigned n = 0; n <= nmax; ++n)
    for (const auto& x : {Rational(1, 3), Rational(-3, 4)})
      r.check(tag("large-lambda limit", n) + " x=" + x.str(), [&] {
        LargeLambdaReport l = large_lambda_check(n, x);
        return Outcome{l.within_bound && l.decays, "dev=" + sci(l.deviation_at_1e6.to_double()) + " bound=" +
                                                       sci(l.bound.to_double()) + " decay=" + sci(l.decay_ratio)};
      });

  for (unsigned n = 0; n <= nmax; ++n) {
    r.check(tag("laplace-type integral", n), [&] {
      double d = std::max(eq51_deviation(n, 1, Rational(1, 2), bits), eq51_deviation(n, Rational(7, 3), Rational(-2, 3), bits));
      return Outcome{d < 1e-8, "max rel_diff=" + sci(d)};
    });
    r.check(tag("beta-type integral of the 3F2", n), [&] {
      double d = std::max(eq23_deviation(n, Rational(1, 2), 2, bits), eq23_deviation(n, -1, Rational(5, 2), bits));
      return Outcome{d < 1e-8, "max rel_diff=" + sci(d)};
    });
  }

  for (auto [k, name] : std::vector<std::pair<PellKind, const char*>>{
           {PellKind::pell, "pell"}, {PellKind::mv_b, "morgan-voyce b"}, {PellKind::mv_B, "morgan-voyce B"}})
    for (unsigned n = 1; n <= nmax; ++n)
      r.check(std::string(name) + " n=" + std::to_string(n), [&] { return from(verify_pell_morgan_voyce(k, n)); });
}

using SuiteFn = void (*)(Recorder&, const SuiteConfig&);

SuiteFn suite_fn(const std::string& name) {
  if (name == "functional-eq") return suite_functional_eq;
  if (name == "recursion") return suite_recursion;
  if (name == "closed-forms") return suite_closed_forms;
  if (name == "transforms") return suite_transforms;
  if (name == "generating") return suite_generating;
  if (name == "quadrature") return suite_quadrature;
  if (name == "difference-eq") return suite_difference_eq;
  if (name == "hahn") return suite_hahn;
  if (name == "identities") return suite_identities;
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace

SuiteRun run_suite(const std::string& name, const SuiteConfig& cfg,
                   const std::function<void(const CaseResult&)>& sink) {
  SuiteRun run;
  std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
  for (const auto& n : names) (void)suite_fn(n);
  if (cfg.max_n && *cfg.max_n == 0) {
    run.warnings.push_back("empty grid (--max-n 0): suite '" + name + "' passes vacuously");
    return run;
  }
  if (cfg.lambda_grid)
    for (const auto& l : *cfg.lambda_grid)
      if (!(l > Rational(-1, 2))) throw PreconditionError("lambda grid value " + l.str() + " must exceed -1/2");
  for (const auto& n : names) {
    Recorder rec(n, run, sink);
    suite_fn(n)(rec, cfg);
  }
  return run;
}

// ---------------------------------------------------------------- transform fuzz

std::string TransformFuzzRecord::json() const {
  ordered_json j;
  j["n"] = n;
  ordered_json p = ordered_json::array();
  for (const auto& x : params) p.push_back(x.str());
  j["params"] = std::move(p);
  if (transform == 8)
    j["transform"] = "thomae";
  else
    j["transform"] = transform;
  j["status"] = !applicable ? "inapplicable" : (ok ? "ok" : "fail");
  j["lhs"] = lhs.str();
  if (rhs)
    j["rhs"] = rhs->str();
  else if (applicable)
    j["deviation"] = deviation;
  return j.dump();
}

TransformFuzzSummary transform_fuzz(std::uint64_t seed, unsigned configurations, unsigned max_n) {
  TransformFuzzSummary out;
  out.exercised.assign(9, 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> ndist(0, max_n);
  while (out.configurations < configurations) {
    const unsigned n = ndist(rng);
    std::vector<Rational> p;
    for (int i = 0; i < 4; ++i) p.push_back(random_rational(rng, -20, 20, 20));
    Rational lhs;
    try {
      lhs = pfq_terminating_exact({{-Rational(n), p[0], p[1]}, {p[2], p[3]}, Rational(1)});
    } catch (const PoleError&) {
      ++out.resampled;
      continue;
    }
    ++out.configurations;
    auto entries = appendix_transforms(n, p[0], p[1], p[2], p[3]);
    for (const auto& e : entries) {
      TransformFuzzRecord rec{n, p, e.index, e.applicable, false, lhs, std::nullopt, 0};
      if (e.applicable) {
        rec.rhs = e.result->prefactor * pfq_terminating_exact(e.result->params);
        rec.ok = *rec.rhs == lhs;
        ++out.exercised[e.index];
      }
      out.records.push_back(std::move(rec));
    }
    TransformFuzzRecord th{n, p, 8, false, false, lhs, std::nullopt, 0};
    try {
      ThomaeCheck c = thomae_check(n, p[0], p[1], p[2], p[3]);
      th.applicable = c.applicable;
      th.ok = c.ok;
      th.rhs = c.rhs_exact;
      th.deviation = c.deviation;
    } catch (const PoleError&) {
    }
    if (th.applicable) ++out.exercised[8];
    out.records.push_back(std::move(th));
  }
  return out;
}

}  // namespace chebmellin
