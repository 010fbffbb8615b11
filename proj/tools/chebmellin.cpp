// chebmellin: polynomial factors, zeros, values, verification suites and
// timing of the Mellin transforms of Chebyshev and Gegenbauer functions.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chebmellin/cheb_mellin.hpp"
#include "chebmellin/errors.hpp"
#include "chebmellin/gegen_mellin.hpp"
#include "chebmellin/numerics.hpp"
#include "chebmellin/poly_json.hpp"
#include "chebmellin/quadrature.hpp"
#include "chebmellin/suites.hpp"

using namespace chebmellin;
using ordered_json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::string n;
  std::optional<unsigned> max_n;
  std::string lambda;
  std::string beta;
  std::string s;
  prec_t precision = 256;
  double tol = 1e-20;
  std::string format;
  std::uint64_t seed = 1;
  bool oracle = false;
  std::string suite = "all";
  std::string lambda_grid;
  std::string from;
};

Rational parse_rational_arg(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "': " + e.what());
  }
}

unsigned parse_index(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("invalid n '" + text + "' (expected a non-negative integer)");
  try {
    return static_cast<unsigned>(std::stoul(text));
  } catch (const std::exception&) {
    throw UsageError("n out of range: '" + text + "'");
  }
}

// "4" or "2..8".
std::vector<unsigned> parse_n_range(const std::string& text) {
  if (text.empty()) throw UsageError("--n is required");
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {parse_index(text)};
  const unsigned a = parse_index(text.substr(0, dots)), b = parse_index(text.substr(dots + 2));
  if (a > b) throw UsageError("empty n range '" + text + "'");
  std::vector<unsigned> v;
  for (unsigned k = a; k <= b; ++k) v.push_back(k);
  return v;
}

struct FamilySpec {
  Family family = Family::U;
  std::optional<Rational> lambda;  // gegenbauer
  std::optional<Rational> beta;    // beta
  // The weight parameter for quadrature and recursions (lambda, or 3/2 - 2 beta).
  std::optional<Rational> weight_lambda() const {
    if (family == Family::Gegenbauer) return lambda;
    if (family == Family::Beta) return GegenParams::from_beta(*beta).lambda;
    return std::nullopt;
  }
};

FamilySpec parse_family_spec(const Options& o, const char* default_family = nullptr) {
  FamilySpec f;
  std::string name = o.family.empty() && default_family ? default_family : o.family;
  if (name.empty()) throw UsageError("--family is required (u, t, gegenbauer, beta)");
  try {
    f.family = parse_family(name);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  if (!o.lambda.empty() && f.family != Family::Gegenbauer) throw UsageError("--lambda applies only to --family gegenbauer");
  if (!o.beta.empty() && f.family != Family::Beta) throw UsageError("--beta applies only to --family beta");
  if (f.family == Family::Gegenbauer) {
    if (o.lambda.empty()) throw UsageError("--family gegenbauer requires --lambda");
    f.lambda = parse_rational_arg(o.lambda, "lambda");
    if (!(*f.lambda > Rational(-1, 2))) throw UsageError("lambda must exceed -1/2");
  }
  if (f.family == Family::Beta) {
    if (o.beta.empty()) throw UsageError("--family beta requires --beta");
    f.beta = parse_rational_arg(o.beta, "beta");
    if (!(*f.beta < 1)) throw UsageError("beta must be below 1");
  }
  return f;
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) return;
  for (const char* a : allowed)
    if (o.format == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError("unsupported --format '" + o.format + "' (allowed: " + list + ")");
}

const std::string& format_or(const Options& o, const std::string& dflt) { return o.format.empty() ? dflt : o.format; }

MellinClosedForm closed_form(const FamilySpec& f, unsigned n) {
  switch (f.family) {
    case Family::U: return mellin_U_closed(n);
    case Family::T: return mellin_T_closed(n);
    case Family::Gegenbauer: return mellin_G_closed(n, *f.lambda);
    case Family::Beta: return mellin_beta_closed(n, *f.beta);
  }
  throw UsageError("unknown family");
}

int digits_for(prec_t bits) { return std::max(1, static_cast<int>(std::floor(static_cast<double>(bits) / 3.32))); }

// Plain decimal where the exponent allows it (%Rg).
std::string decimal(const BigFloat& x, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string decimal(const BigComplex& z, int digits) {
  if (z.im().is_zero()) return decimal(z.re(), digits);
  std::string im = decimal(z.im(), digits);
  if (im[0] != '-') im = "+" + im;
  return decimal(z.re(), digits) + im + "i";
}

std::string lambda_column(const FamilySpec& f) {
  auto l = f.weight_lambda();
  return l ? l->str() : "";
}

// ---------------------------------------------------------------- poly

int cmd_poly(const Options& o) {
  check_format(o, {"json"});
  if (!o.from.empty()) {
    std::string text;
    if (o.from == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
      std::ifstream in(o.from);
      if (!in) throw UsageError("cannot read '" + o.from + "'");
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      try {
        std::cout << to_json(parse_poly_json(line)) << "\n";
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
    }
    return 0;
  }
  const FamilySpec f = parse_family_spec(o);
  for (unsigned n : parse_n_range(o.n)) std::cout << to_json(poly_document(closed_form(f, n))) << "\n";
  return 0;
}

// ---------------------------------------------------------------- zeros

int cmd_zeros(const Options& o) {
  check_format(o, {"csv", "json"});
  const FamilySpec f = parse_family_spec(o);
  const auto ns = parse_n_range(o.n);
  const bool csv = format_or(o, "csv") == "csv";
  const int digits = digits_for(o.precision);
  const LineVerdict expected = f.family == Family::T ? LineVerdict::real_line : LineVerdict::critical;
  if (csv) std::cout << "n,family,lambda,root_index,re,im,residual\n";
  bool all_ok = true;
  for (unsigned n : ns) {
    const MellinClosedForm cf = closed_form(f, n);
    ZeroReport zr = find_roots(cf.poly, o.precision);
    CriticalLineReport rep = critical_line_report(zr, o.tol);
    for (size_t i = 0; i < zr.roots.size(); ++i) {
      const BigComplex& r = zr.roots[i];
      if (csv) {
        std::cout << n << "," << family_name(f.family) << "," << lambda_column(f) << "," << i << ","
                  << r.re().str(digits) << "," << r.im().str(digits) << "," << zr.residuals[i].str(6) << "\n";
      } else {
        ordered_json j;
        j["schema"] = "1";
        j["n"] = n;
        j["family"] = family_name(f.family);
        j["lambda"] = lambda_column(f);
        j["root_index"] = i;
        j["re"] = r.re().str(digits);
        j["im"] = r.im().str(digits);
        j["residual"] = zr.residuals[i].str(6);
        std::cout << j.dump() << "\n";
      }
    }
    const bool ok = zr.converged && (rep.vacuous || rep.verdict == expected);
    all_ok = all_ok && ok;
    const double dev = zr.roots.empty() ? 0.0 : zr.max_re_deviation.to_double();
    char devs[32];
    std::snprintf(devs, sizeof devs, "%.3e", dev);
    std::cerr << "family=" << family_name(f.family) << " n=" << n << " verdict=" << verdict_name(rep.verdict)
              << " max_re_dev=" << devs << (rep.vacuous ? " (vacuous)" : "") << (ok ? "" : " MISMATCH") << "\n";
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- eval

BigComplex parse_s(const Options& o, prec_t bits, std::pair<Rational, Rational>* exact = nullptr) {
  if (o.s.empty()) throw UsageError("--s is required");
  std::pair<Rational, Rational> p;
  try {
    p = parse_complex_literal(o.s);
  } catch (const std::exception& e) {
    throw UsageError("invalid --s '" + o.s + "': " + e.what());
  }
  if (exact) *exact = p;
  return BigComplex(p.first, p.second, bits);
}

int cmd_eval(const Options& o) {
  check_format(o, {"text", "json"});
  const FamilySpec f = parse_family_spec(o);
  const auto ns = parse_n_range(o.n);
  if (ns.size() != 1) throw UsageError("eval takes a single --n");
  const unsigned n = ns.front();
  std::pair<Rational, Rational> sx;
  const BigComplex s = parse_s(o, o.precision, &sx);
  const MellinClosedForm cf = closed_form(f, n);
  const int digits = digits_for(o.precision);

  BigComplex value = mellin_eval(cf, s, o.precision);
  std::optional<Rational> exact;
  if (sx.second.is_zero()) {
    try {
      exact = mellin_eval_exact(cf, sx.first);
    } catch (const PoleError&) {
    }
  }
  std::optional<BigComplex> oracle;
  double diff = 0;
  if (o.oracle) {
    oracle = mellin_quadrature(f.family, n, f.weight_lambda(), s, o.precision);
    diff = relative_difference(*oracle, value).to_double();
  }
  char diffs[32];
  std::snprintf(diffs, sizeof diffs, "%.3e", diff);
  if (format_or(o, "text") == "text") {
    std::cout << "value=" << decimal(value, digits) << "\n";
    if (exact) std::cout << "exact=" << exact->str() << "\n";
    if (oracle) std::cout << "oracle=" << decimal(*oracle, 17) << "\nrel_diff=" << diffs << "\n";
  } else {
    ordered_json j;
    j["schema"] = "1";
    j["family"] = family_name(f.family);
    j["n"] = n;
    if (f.lambda) j["lambda"] = f.lambda->str();
    if (f.beta) j["beta"] = f.beta->str();
    j["s"] = o.s;
    j["value"] = decimal(value, digits);
    if (exact) j["exact"] = exact->str();
    if (oracle) {
      j["oracle"] = decimal(*oracle, 17);
      j["rel_diff"] = diff;
    }
    std::cout << j.dump() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& o) {
  check_format(o, {"json"});
  if (!is_suite_name(o.suite)) throw UsageError("unknown suite '" + o.suite + "'");
  SuiteConfig cfg;
  cfg.max_n = o.max_n;
  cfg.seed = o.seed;
  cfg.precision = o.precision;
  cfg.tol = o.tol;
  if (!o.lambda_grid.empty()) {
    std::vector<Rational> grid;
    std::stringstream ss(o.lambda_grid);
    std::string item;
    while (std::getline(ss, item, ',')) {
      Rational l = parse_rational_arg(item, "lambda-grid entry");
      if (!(l > Rational(-1, 2))) throw UsageError("lambda-grid entries must exceed -1/2");
      grid.push_back(l);
    }
    if (grid.empty()) throw UsageError("empty --lambda-grid");
    cfg.lambda_grid = grid;
  }
  SuiteRun run = run_suite(o.suite, cfg, [](const CaseResult& c) { std::cout << to_json_line(c) << std::endl; });
  for (const auto& w : run.warnings) std::cerr << "warning: " << w << "\n";
  const unsigned fails = run.failures();
  std::cerr << "suite=" << o.suite << " cases=" << run.cases.size() << " failures=" << fails << "\n";
  if (fails) std::cerr << fails << " case(s) failed\n";
  return fails ? 1 : 0;
}

// ---------------------------------------------------------------- bench

// Index recursion from the closed-form base cases: the mixed recursion for
// the Chebyshev families, the three-term one in the Gegenbauer weight.
BigComplex recursion_value(const FamilySpec& f, unsigned n, const BigComplex& s, prec_t wp) {
  const bool cheb = f.family == Family::U || f.family == Family::T;
  auto base = [&](unsigned k) { return closed_form(f, k); };
  const MellinClosedForm f0 = base(0), f1 = base(1);
  std::vector<BigComplex> prev2, prev1;  // M_{k-2}(s+j), M_{k-1}(s+j)
  for (unsigned j = 0; j <= n; ++j) {
    BigComplex sj = s + Rational(j);
    prev2.push_back(mellin_eval(f0, sj, wp));
    prev1.push_back(mellin_eval(f1, sj, wp));
  }
  if (n == 0) return prev2[0];
  const Rational lam = cheb ? Rational(1) : *f.weight_lambda();
  for (unsigned k = 2; k <= n; ++k) {
    std::vector<BigComplex> cur;
    for (unsigned j = 0; j + k <= n; ++j) {
      if (cheb) {
        cur.push_back(prev1[j + 1] * Rational(2) - prev2[j]);
      } else {
        const Rational a = 2 * (lam + Rational(k) - 1) / Rational(k), b = (2 * lam + Rational(k) - 2) / Rational(k);
        cur.push_back(prev1[j + 1] * a - prev2[j] * b);
      }
    }
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1[0];
}

// Term-by-term Beta integrals of the explicit polynomial (first kind).
BigComplex t_coefficient_sum(unsigned n, const BigComplex& s, prec_t wp) {
  const RatPoly t = chebyshev_poly(ChebKind::T, n);
  BigComplex acc(BigFloat(0L, wp), BigFloat(0L, wp));
  const BigComplex half_s = s * BigFloat(Rational(1, 2), wp);
  const BigComplex g32 = gamma(BigComplex(Rational(3, 2), wp));
  for (unsigned j = 0; j <= n; ++j) {
    const Rational c = t.coeff(j);
    if (c.is_zero()) continue;
    const BigComplex a = half_s + Rational(j, 2);
    acc += gamma_ratio(a, a + Rational(3, 2)) * g32 * (c / 2);
  }
  return acc;
}

BigComplex hypergeometric_value(const FamilySpec& f, unsigned n, const BigComplex& s, prec_t bits) {
  switch (f.family) {
    case Family::U: return u_hypergeometric_eval(n, s, UHyperVariant::a, bits);
    case Family::T: return t_coefficient_sum(n, s, bits + 2 * n + 32).with_precision(bits);
    default: return mellin_eval(closed_form(f, n), s, bits);
  }
}

int cmd_bench(const Options& o) {
  check_format(o, {"csv"});
  const FamilySpec f = parse_family_spec(o, "u");
  const BigComplex s = o.s.empty() ? BigComplex(Rational(2), o.precision) : parse_s(o, o.precision);
  const unsigned max_n = o.max_n.value_or(32);
  std::cout << "family,n,method,precision_bits,wall_time\n";
  for (unsigned n : {8u, 16u, 32u}) {
    if (n > max_n) continue;
    std::optional<BigComplex> rec, hyp;
    for (const char* method : {"recursion", "hypergeometric", "quadrature"}) {
      const auto t0 = std::chrono::steady_clock::now();
      const std::string m = method;
      if (m == "recursion") {
        rec = recursion_value(f, n, s, o.precision + 64).with_precision(o.precision);
      } else if (m == "hypergeometric") {
        hyp = hypergeometric_value(f, n, s, o.precision);
      } else {
        (void)mellin_quadrature(f.family, n, f.weight_lambda(), s, o.precision);
      }
      const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", dt);
      std::cout << family_name(f.family) << "," << n << "," << method << "," << o.precision << "," << buf << "\n";
    }
    const double d = relative_difference(*rec, *hyp).to_double();
    if (!(d < 1e-20))
      std::cerr << "warning: recursion and hypergeometric values differ at n=" << n << " (rel " << d << ")\n";
  }
  return 0;
}

void add_family_options(CLI::App* c, Options& o) {
  c->add_option("--family", o.family, "u, t, gegenbauer or beta");
  c->add_option("--lambda", o.lambda, "Gegenbauer parameter (rational)");
  c->add_option("--beta", o.beta, "Beta-family parameter (rational)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mellin transforms of Chebyshev and Gegenbauer functions: exact polynomial factors and checks"};
  app.require_subcommand(1);
  Options o;

  auto* poly = app.add_subcommand("poly", "emit the polynomial factor as JSON");
  add_family_options(poly, o);
  poly->add_option("--n", o.n, "index or range a..b");
  poly->add_option("--format", o.format, "json");
  poly->add_option("--from", o.from, "re-emit polynomial JSON lines read from a file ('-' for stdin)");

  auto* zeros = app.add_subcommand("zeros", "locate the zeros and classify them");
  add_family_options(zeros, o);
  zeros->add_option("--n", o.n, "index or range a..b");
  zeros->add_option("--precision", o.precision, "working precision in bits")->check(CLI::Range(32, 1 << 16));
  zeros->add_option("--tol", o.tol, "tolerance for the line verdict")->check(CLI::PositiveNumber);
  zeros->add_option("--format", o.format, "csv or json");

  auto* eval = app.add_subcommand("eval", "evaluate the transform at s");
  add_family_options(eval, o);
  eval->add_option("--n", o.n, "index");
  eval->add_option("--s", o.s, "complex point a+bi (rational or decimal parts)");
  eval->add_option("--precision", o.precision, "working precision in bits")->check(CLI::Range(32, 1 << 16));
  eval->add_option("--format", o.format, "text or json");
  eval->add_flag("--oracle", o.oracle, "also integrate numerically and report the relative difference");

  auto* verify = app.add_subcommand("verify", "run verification suites (JSON lines)");
  verify->add_option("--suite", o.suite, "suite name or 'all'");
  verify->add_option("--max-n", o.max_n, "cap on n for every grid (0: empty grid)");
  verify->add_option("--lambda-grid", o.lambda_grid, "comma-separated lambda values");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--precision", o.precision, "working precision in bits")->check(CLI::Range(64, 1 << 16));
  verify->add_option("--tol", o.tol, "zero-location tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--format", o.format, "json");

  auto* bench = app.add_subcommand("bench", "time recursion, hypergeometric and quadrature evaluation (CSV)");
  add_family_options(bench, o);
  bench->add_option("--max-n", o.max_n, "largest n of {8, 16, 32} to time (0: header only)");
  bench->add_option("--s", o.s, "evaluation point (default 2)");
  bench->add_option("--precision", o.precision, "working precision in bits")->check(CLI::Range(64, 1 << 16));
  bench->add_option("--format", o.format, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return 2;
  }

  try {
    if (*poly) return cmd_poly(o);
    if (*zeros) return cmd_zeros(o);
    if (*eval) return cmd_eval(o);
    if (*verify) return cmd_verify(o);
    if (*bench) return cmd_bench(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
