#include "chebmellin/hypergeom.hpp"

#include <cmath>
#include <functional>

#include "chebmellin/errors.hpp"

namespace chebmellin {

std::optional<unsigned> termination_index(const RationalHyper& h) {
  std::optional<unsigned> best;
  for (const auto& a : h.numerator) {
    if (a.is_nonpositive_integer()) {
      unsigned n = static_cast<unsigned>(-a.to_long());
      if (!best || n < *best) best = n;
    }
  }
  return best;
}

std::optional<unsigned> termination_index(const ComplexHyper& h) {
  std::optional<unsigned> best;
  for (const auto& a : h.numerator) {
    if (a.is_nonpositive_integer()) {
      unsigned n = static_cast<unsigned>(-a.re().to_rational().to_long());
      if (!best || n < *best) best = n;
    }
  }
  return best;
}

ComplexHyper to_complex(const RationalHyper& h, prec_t prec) {
  ComplexHyper c;
  for (const auto& a : h.numerator) c.numerator.emplace_back(a, prec);
  for (const auto& b : h.denominator) c.denominator.emplace_back(b, prec);
  c.argument = BigComplex(h.argument, prec);
  return c;
}

Rational pfq_terminating_exact(const RationalHyper& h) {
  auto n = termination_index(h);
  if (!n) throw PreconditionError("pfq_terminating_exact: series does not terminate");
  Rational sum(0), term(1);
  for (unsigned k = 0;; ++k) {
    sum += term;
    if (k == *n) break;
    // Numerator factors first so a vanishing term ends the sum before any
    // denominator pole at a later index is touched.
    Rational next = term * h.argument;
    for (const auto& a : h.numerator) next *= a + Rational(k);
    if (next.is_zero()) break;
    for (const auto& b : h.denominator) {
      Rational f = b + Rational(k);
      if (f.is_zero())
        throw PoleError("pole before termination: denominator parameter " + b.str() + " at index " +
                        std::to_string(k + 1));
      next /= f;
    }
    next /= Rational(k + 1);
    term = std::move(next);
  }
  return sum;
}

namespace {

BigComplex sum_terminating(const ComplexHyper& h, unsigned n, prec_t wp, BigFloat& max_term) {
  BigComplex sum(BigFloat(0L, wp)), term(BigFloat(1L, wp));
  BigComplex z = h.argument.with_precision(wp);
  max_term = BigFloat(1L, wp);
  for (unsigned k = 0;; ++k) {
    sum += term;
    if (k == n) break;
    BigComplex next = term * z;
    bool zero = false;
    for (const auto& a : h.numerator) {
      BigComplex f = a.with_precision(wp) + Rational(k);
      if (f.is_zero()) zero = true;
      next *= f;
    }
    if (zero || next.is_zero()) break;
    for (const auto& b : h.denominator) {
      BigComplex f = b.with_precision(wp) + Rational(k);
      if (f.is_zero()) throw PoleError("pole before termination in pfq_numeric");
      next /= f;
    }
    next = next * BigFloat(Rational(1) / Rational(k + 1), wp);
    term = std::move(next);
    max_term = max(max_term, abs(term));
  }
  return sum;
}

// Upper bound on |t_{k+1}/t_k| over all k >= K; negative when no bound applies yet.
double ratio_bound(const ComplexHyper& h, double absz, unsigned K) {
  std::vector<std::pair<double, double>> dens;  // (Re b, |b|)
  for (const auto& b : h.denominator) dens.emplace_back(b.re().to_double(), 0.0);
  dens.emplace_back(1.0, 0.0);  // the k! factor
  const size_t p = h.numerator.size();
  if (p > dens.size()) return -1;
  double rho = absz;
  for (size_t j = 0; j < dens.size(); ++j) {
    const double base = K + dens[j].first;
    if (base <= 0) return -1;
    if (j < p) {
      const BigComplex& b = j < h.denominator.size() ? h.denominator[j] : BigComplex(BigFloat(1L, 64));
      double diff = abs(h.numerator[j] - b).to_double();
      rho *= 1 + diff / base;
    } else {
      rho /= base;
    }
  }
  return rho;
}

}  // namespace

BigComplex pfq_numeric(const ComplexHyper& h, prec_t bits) {
  prec_t wp = bits + 32;
  if (auto n = termination_index(h)) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      BigFloat max_term;
      BigComplex s = sum_terminating(h, *n, wp, max_term);
      BigFloat mag = abs(s);
      // Cancellation: retry with the lost bits added back.
      double lost = mag.is_zero() ? static_cast<double>(wp) : log2(max_term / mag).to_double();
      if (lost < static_cast<double>(wp - bits) - 8 || mag.is_zero()) return s.with_precision(bits);
      wp = bits + 40 + static_cast<prec_t>(std::ceil(lost));
    }
    throw ConvergenceError("pfq_numeric: cancellation not resolved");
  }
  for (const auto& b : h.denominator)
    if (b.is_nonpositive_integer()) throw PoleError("pfq_numeric: denominator parameter at a pole");
  if (h.argument.is_zero()) return BigComplex(BigFloat(1L, bits));
  const size_t p = h.numerator.size(), q = h.denominator.size();
  const double absz = abs(h.argument).to_double();
  if (p > q + 1 || (p == q + 1 && !(absz < 1)))
    throw DivergenceError("pfq_numeric: non-terminating series outside |z| < 1");

  for (int attempt = 0; attempt < 4; ++attempt) {
    BigComplex z = h.argument.with_precision(wp);
    BigComplex sum(BigFloat(0L, wp)), term(BigFloat(1L, wp));
    BigFloat max_term(1L, wp);
    const BigFloat eps = ldexp(BigFloat(1L, wp), -static_cast<long>(bits) - 12);
    for (unsigned k = 0;; ++k) {
      sum += term;
      BigComplex next = term * z;
      for (const auto& a : h.numerator) next *= a.with_precision(wp) + Rational(k);
      for (const auto& b : h.denominator) next /= b.with_precision(wp) + Rational(k);
      next = next * BigFloat(Rational(1) / Rational(k + 1), wp);
      term = std::move(next);
      max_term = max(max_term, abs(term));
      double rho = ratio_bound(h, absz, k + 1);
      if (rho >= 0 && rho < 1) {
        BigFloat tail = abs(term) * BigFloat(rho / (1 - rho) + 1, wp);
        if (tail <= eps * abs(sum)) break;
      }
      if (k > 10000000) throw ConvergenceError("pfq_numeric: too many terms");
    }
    sum += term;
    BigFloat mag = abs(sum);
    double lost = mag.is_zero() ? static_cast<double>(wp) : log2(max_term / mag).to_double();
    if (lost < static_cast<double>(wp - bits) - 8) return sum.with_precision(bits);
    wp = bits + 40 + static_cast<prec_t>(std::ceil(lost));
  }
  throw ConvergenceError("pfq_numeric: cancellation not resolved");
}

BigComplex pfq_numeric(const RationalHyper& h, prec_t bits) { return pfq_numeric(to_complex(h, bits + 32), bits); }

namespace {

// Richardson extrapolation over partial sums at N = 32 * 2^level, shared by
// the real and complex paths. T is BigFloat or BigComplex.
template <class T, class Step>
UnitArgumentSum richardson_unit(Step&& step, const std::function<T(unsigned)>& factor, prec_t bits, prec_t wp,
                                double target) {
  const unsigned n0 = 32;
  const unsigned max_levels = 15;
  std::vector<std::vector<T>> table;
  T sum = T(BigFloat(0L, wp));
  unsigned k = 0;
  unsigned goal = n0;
  const BigFloat tol = target > 0 ? BigFloat(target, wp) : ldexp(BigFloat(1L, wp), -static_cast<long>(bits) + 8);
  BigFloat last_err = BigFloat::infinity(bits);
  const T one = T(BigFloat(1L, wp));
  for (unsigned level = 0; level < max_levels; ++level, goal *= 2) {
    while (k < goal) step(sum, k++);
    std::vector<T> row{sum};
    for (unsigned i = 1; i <= level; ++i) {
      T f = factor(i);
      T num = f * row[i - 1] - table[level - 1][i - 1];
      T den = f - one;
      row.push_back(num / den);
    }
    table.push_back(std::move(row));
    if (level >= 2) {
      BigFloat err = abs(table[level][level] - table[level - 1][level - 1]);
      last_err = err.with_precision(bits);
      if (err <= tol * abs(table[level][level])) break;
    }
  }
  return {BigComplex(table.back().back()).with_precision(bits), last_err};
}

}  // namespace

UnitArgumentSum pfq_unit_argument(const ComplexHyper& h, prec_t bits, double target) {
  if (termination_index(h)) return {pfq_numeric(h, bits), BigFloat(0L, bits)};
  if (h.numerator.size() != h.denominator.size() + 1)
    throw PreconditionError("pfq_unit_argument expects a (q+1)Fq series");
  const prec_t wp = bits + 64;
  BigComplex excess(BigFloat(0L, wp));
  for (const auto& b : h.denominator) excess += b.with_precision(wp);
  for (const auto& a : h.numerator) excess -= a.with_precision(wp);
  if (!(excess.re().sign() > 0)) throw DivergenceError("unit-argument series with non-positive excess");
  for (const auto& b : h.denominator)
    if (b.is_nonpositive_integer()) throw PoleError("pfq_unit_argument: denominator pole");

  bool real = excess.is_real();
  for (const auto& a : h.numerator) real = real && a.is_real();
  for (const auto& b : h.denominator) real = real && b.is_real();

  if (real) {
    std::vector<BigFloat> num, den;
    for (const auto& a : h.numerator) num.push_back(a.re().with_precision(wp));
    for (const auto& b : h.denominator) den.push_back(b.re().with_precision(wp));
    BigFloat term(1L, wp);
    auto step = [&](BigFloat& sum, unsigned k) {
      sum += term;
      BigFloat nt = term;
      for (const auto& a : num) nt *= a + Rational(k);
      for (const auto& b : den) nt /= b + Rational(k);
      term = nt / static_cast<long>(k + 1);
    };
    const BigFloat ex = excess.re();
    const BigFloat two(2L, wp);
    std::function<BigFloat(unsigned)> factor = [&](unsigned i) {
      return pow(two, ex + BigFloat(static_cast<long>(i - 1), wp));
    };
    return richardson_unit<BigFloat>(step, factor, bits, wp, target);
  }

  BigComplex term(BigFloat(1L, wp));
  auto step = [&](BigComplex& sum, unsigned k) {
    sum += term;
    BigComplex nt = term;
    for (const auto& a : h.numerator) nt *= a.with_precision(wp) + Rational(k);
    for (const auto& b : h.denominator) nt /= b.with_precision(wp) + Rational(k);
    term = nt * BigFloat(Rational(1) / Rational(k + 1), wp);
  };
  const BigComplex two(BigFloat(2L, wp));
  std::function<BigComplex(unsigned)> factor = [&](unsigned i) {
    return pow(two, excess + BigComplex(BigFloat(static_cast<long>(i - 1), wp)));
  };
  return richardson_unit<BigComplex>(step, factor, bits, wp, target);
}

Rational chu_vandermonde(unsigned n, const Rational& b, const Rational& c) {
  Rational den = pochhammer(c, n);
  if (den.is_zero()) throw PoleError("chu_vandermonde: (c)_n vanishes");
  return pochhammer(c - b, n) / den;
}

Rational lemma5_coefficient(const Rational& a, const Rational& b, const Rational& c, unsigned m,
                            QuadraticVariant variant) {
  if (c.is_nonpositive_integer()) throw PoleError("quadratic coefficient: c is a non-positive integer");
  const Rational mm(static_cast<long>(m));
  Rational pre = Rational(4).pow(m) * pochhammer(a, m) * pochhammer(b, m) / (pochhammer(c, m) * factorial(m));
  // A vanishing prefactor meets a pole of the 4F3: only the limit is finite.
  if (pre.is_zero()) throw PoleError("quadratic coefficient: (a)_m (b)_m vanishes");
  const bool single = variant == QuadraticVariant::single;
  RationalHyper h{{single ? Rational(1, 2) - mm : Rational(-1, 2) - mm, Rational(1) - c - mm, -mm, -mm},
                  {Rational(1) - a - mm, Rational(1) - b - mm, single ? Rational(-2) * mm : Rational(-1) - Rational(2) * mm},
                  Rational(1)};
  return pre * pfq_terminating_exact(h);
}

Rational quadratic_coefficient_3f2(const Rational& b, const Rational& c, unsigned m, QuadraticVariant variant) {
  if (c.is_nonpositive_integer()) throw PoleError("quadratic coefficient (3F2): c is a non-positive integer");
  const Rational mm(static_cast<long>(m));
  Rational pre = Rational(4).pow(m) * pochhammer(b, m) / pochhammer(c, m);
  if (pre.is_zero()) throw PoleError("quadratic coefficient (3F2): (b)_m vanishes");
  const bool single = variant == QuadraticVariant::single;
  RationalHyper h{{single ? Rational(1, 2) - mm : Rational(-1, 2) - mm, Rational(1) - c - mm, -mm},
                  {Rational(1) - b - mm, single ? Rational(-2) * mm : Rational(-1) - Rational(2) * mm},
                  Rational(1)};
  return pre * pfq_terminating_exact(h);
}

}  // namespace chebmellin
