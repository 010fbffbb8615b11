#include "chebmellin/quadrature.hpp"

#include <cmath>

#include "chebmellin/errors.hpp"
#include "chebmellin/simd/kernels.hpp"

namespace chebmellin {

const char* family_name(Family f) {
  switch (f) {
    case Family::U: return "U";
    case Family::T: return "T";
    case Family::Gegenbauer: return "gegenbauer";
    case Family::Beta: return "beta";
  }
  return "?";
}

double quadrature_target(prec_t bits) {
  return std::max(std::pow(10.0, -static_cast<double>(bits) * 0.25), 1e-12);
}

namespace {

// t-range of the tanh-sinh transform: beyond it the endpoint distance drops
// below ~1e-275 and contributions vanish in double precision.
constexpr double kTMax = 6.0;

struct Node {
  double dl, dr, w;  // distance to left end, to right end, dtheta/dt
};

// Nodes t = -T + h*(j + offset) for offset in {0} (level 0) or {1/2}
// (midpoints added when halving h).
template <class Fn>
void for_nodes(double length, double h, bool midpoints_only, Fn&& fn) {
  const int count = static_cast<int>(std::lround(2 * kTMax / h));
  for (int j = 0; j <= count; ++j) {
    if (midpoints_only && j == count) break;
    const double t = -kTMax + h * (j + (midpoints_only ? 0.5 : 0.0));
    const double u = M_PI_2 * std::sinh(t);
    // dl = L / (1 + e^{-2u}), dr = L / (1 + e^{2u})
    const double e = std::exp(-2 * std::fabs(u));
    const double small = length * e / (1 + e);
    const double big = length / (1 + e);
    const double dl = u < 0 ? small : big;
    const double dr = u < 0 ? big : small;
    const double sech = 2 * std::exp(-std::fabs(u)) / (1 + e);
    const double w = length / 2 * sech * sech * M_PI_2 * std::cosh(t);
    if (dl <= 0 || dr <= 0 || w == 0) continue;
    fn(Node{dl, dr, w});
  }
}

}  // namespace

std::complex<double> tanh_sinh(const std::function<std::complex<double>(double, double)>& f, double length,
                               double target, const QuadratureOptions& opt) {
  double h = 2 * kTMax / opt.initial_nodes;
  std::complex<double> sum = 0;
  double abs_sum = 0;
  for_nodes(length, h, false, [&](const Node& nd) {
    auto v = f(nd.dl, nd.dr) * nd.w;
    sum += v;
    abs_sum += std::abs(v);
  });
  std::complex<double> est = sum * h;
  for (unsigned level = 0; level < opt.max_doublings; ++level) {
    std::complex<double> extra = 0;
    for_nodes(length, h, true, [&](const Node& nd) {
      auto v = f(nd.dl, nd.dr) * nd.w;
      extra += v;
      abs_sum += std::abs(v);
    });
    sum += extra;
    h /= 2;
    std::complex<double> next = sum * h;
    double scale = std::max(std::abs(next), 1e-3 * abs_sum * h);
    if (std::abs(next - est) <= target * scale) return next;
    est = next;
  }
  throw ConvergenceError("tanh-sinh quadrature did not converge");
}

namespace {

simd::Recurrence make_recurrence(Family family, unsigned n, double lambda) {
  simd::Recurrence rec;
  rec.a.resize(n + 2);
  rec.b.resize(n + 2);
  for (unsigned k = 0; k <= n + 1; ++k) {
    switch (family) {
      case Family::U:
        rec.a[k] = 2;
        rec.b[k] = k == 0 ? 0 : 1;
        break;
      case Family::T:
        rec.a[k] = k == 0 ? 1 : 2;
        rec.b[k] = k == 0 ? 0 : 1;
        break;
      case Family::Gegenbauer:
      case Family::Beta:
        // (k+1) C_{k+1} = 2(k+lambda) x C_k - (k+2lambda-1) C_{k-1}
        rec.a[k] = 2 * (k + lambda) / (k + 1);
        rec.b[k] = k == 0 ? 0 : (k + 2 * lambda - 1) / (k + 1);
        break;
    }
  }
  return rec;
}

}  // namespace

std::vector<std::complex<double>> mellin_moments(Family family, unsigned n, double lambda, std::complex<double> s,
                                                 double target, const QuadratureOptions& opt) {
  const simd::Recurrence rec = make_recurrence(family, n, family == Family::U ? 1.0 : lambda);
  const double sin_exponent = family == Family::T ? 2.0 : (family == Family::U ? 0.5 : lambda - 0.5);
  const double length = M_PI_2;

  std::vector<double> x, xinv, we_re, we_im, wo_re, wo_im;
  auto add_nodes = [&](double h, bool mid) {
    x.clear(); xinv.clear(); we_re.clear(); we_im.clear(); wo_re.clear(); wo_im.clear();
    for_nodes(length, h, mid, [&](const Node& nd) {
      // theta = dl; cos(theta) = sin(dr), sin(theta) = sin(dl)
      const double c = std::sin(nd.dr);
      const double sn = std::sin(nd.dl);
      const double lc = std::log(c), ls = std::log(sn);
      const std::complex<double> even = std::exp((s - 1.0) * lc + sin_exponent * ls) * nd.w;
      const std::complex<double> odd = std::exp(s * lc + sin_exponent * ls) * nd.w;
      x.push_back(c);
      xinv.push_back(1 / c);
      we_re.push_back(even.real());
      we_im.push_back(even.imag());
      wo_re.push_back(odd.real());
      wo_im.push_back(odd.imag());
    });
  };
  auto accumulate = [&](std::vector<double>& re, std::vector<double>& im) {
    simd::MomentInput in{x.data(), xinv.data(), we_re.data(), we_im.data(), wo_re.data(), wo_im.data(), x.size()};
    simd::weighted_moments(in, rec, n, re.data(), im.data());
  };

  double h = 2 * kTMax / opt.initial_nodes;
  std::vector<double> sre(n + 1, 0.0), sim(n + 1, 0.0);
  add_nodes(h, false);
  accumulate(sre, sim);
  // Absolute floor for moments that cancel or vanish (first-kind moments are
  // exactly zero at some integer s): a fraction of the integral of |weight|.
  double abs_scale = 0;
  for (size_t i = 0; i < x.size(); ++i) abs_scale += std::hypot(we_re[i], we_im[i]) + std::hypot(wo_re[i], wo_im[i]);
  abs_scale *= h;

  std::vector<std::complex<double>> est(n + 1);
  for (unsigned k = 0; k <= n; ++k) est[k] = {sre[k] * h, sim[k] * h};
  for (unsigned level = 0; level < opt.max_doublings; ++level) {
    add_nodes(h, true);
    accumulate(sre, sim);
    h /= 2;
    bool ok = true;
    std::vector<std::complex<double>> next(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
      next[k] = {sre[k] * h, sim[k] * h};
      double scale = std::max(std::abs(next[k]), 1e-3 * abs_scale);
      if (!(std::abs(next[k] - est[k]) <= target * scale)) ok = false;
    }
    est = std::move(next);
    if (ok) return est;
  }
  throw ConvergenceError("Mellin quadrature did not converge");
}

BigComplex mellin_quadrature(Family family, unsigned n, std::optional<Rational> lambda, const BigComplex& s,
                             prec_t bits, const QuadratureOptions& opt) {
  double lam = 1.0;
  if (family == Family::Gegenbauer || family == Family::Beta) {
    if (!lambda) throw PreconditionError("Gegenbauer quadrature needs lambda");
    lam = lambda->to_double();
    if (!(lam > -0.5)) throw PreconditionError("lambda must exceed -1/2");
  }
  const double sre = s.re().to_double();
  if (n % 2 == 0 ? !(sre > 0) : !(sre > -1))
    throw PreconditionError("Mellin integral diverges: need Re s > 0 (n even) or Re s > -1 (n odd)");
  const double target = opt.target > 0 ? opt.target : quadrature_target(bits);
  auto m = mellin_moments(family, n, lam, {sre, s.im().to_double()}, target, opt);
  return BigComplex(m[n].real(), m[n].imag(), bits);
}

BigComplex auxiliary_quadrature(AuxKind kind, const AuxParams& p, prec_t bits) {
  const double target = quadrature_target(bits);
  std::complex<double> value;
  switch (kind) {
    case AuxKind::eq23: {
      if (!(p.beta < 1)) throw PreconditionError("eq23 requires beta < 1");
      // 2F1((1-n)/2, -n/2; 1-(n+s)/2; x) as explicit coefficients.
      std::vector<std::complex<double>> c;
      std::complex<double> term = 1.0;
      const double a = (1.0 - p.n) / 2, b = -static_cast<double>(p.n) / 2;
      const std::complex<double> d = 1.0 - (static_cast<double>(p.n) + p.s) / 2.0;
      for (unsigned k = 0;; ++k) {
        c.push_back(term);
        if (a + k == 0 || b + k == 0) break;
        term *= (a + k) * (b + k) / ((d + static_cast<double>(k)) * static_cast<double>(k + 1));
      }
      value = tanh_sinh(
          [&](double dl, double dr) {
            std::complex<double> acc = 0;
            for (size_t k = c.size(); k-- > 0;) acc = acc * dl + c[k];
            return std::pow(dl * dr, -p.beta) * acc;
          },
          1.0, target);
      break;
    }
    case AuxKind::eq312: {
      if (!(p.r > -1 && p.q > -1)) throw PreconditionError("eq312 requires r, q > -1");
      // U_n(x) coefficients by recurrence, evaluated in batch at the nodes.
      std::vector<double> u0{1.0}, u1{0.0, 2.0};
      std::vector<double> un = p.n == 0 ? u0 : u1;
      for (unsigned k = 1; k < p.n; ++k) {
        std::vector<double> nx(k + 2, 0.0);
        for (size_t i = 0; i < u1.size(); ++i) nx[i + 1] += 2 * u1[i];
        for (size_t i = 0; i < u0.size(); ++i) nx[i] -= u0[i];
        u0 = u1;
        u1 = nx;
        un = nx;
      }
      std::vector<double> xs, ws;
      const double h = 2 * kTMax / 800;
      // Nodes are collected once; values are evaluated with the batch kernel.
      for_nodes(1.0, h, false, [&](const Node& nd) {
        xs.push_back(nd.dl);
        ws.push_back(nd.w * std::pow(nd.dl, p.r) * std::pow(nd.dr, p.q));
      });
      std::vector<double> vals(xs.size());
      simd::horner_batch(un.data(), static_cast<unsigned>(un.size() - 1), xs.data(), xs.size(), vals.data());
      double coarse = 0;
      for (size_t i = 0; i < xs.size(); ++i) coarse += vals[i] * ws[i];
      coarse *= h;
      // Confirm with the adaptive scalar rule.
      value = tanh_sinh(
          [&](double dl, double dr) {
            double acc = un.back();
            for (size_t k = un.size() - 1; k-- > 0;) acc = acc * dl + un[k];
            return std::complex<double>(std::pow(dl, p.r) * std::pow(dr, p.q) * acc, 0);
          },
          1.0, target);
      if (std::abs(value - coarse) > 1e-9 * std::max(1.0, std::abs(value)))
        throw ConvergenceError("eq312 batch and adaptive quadrature disagree");
      break;
    }
    case AuxKind::eq51: {
      if (!(p.lambda > 0)) throw PreconditionError("eq51 requires lambda > 0");
      if (!(std::fabs(p.x) < 1)) throw PreconditionError("eq51 numeric check requires |x| < 1");
      const double root = std::sqrt(1 - p.x * p.x);
      // Symmetric integrand about pi/2: cos(theta) via the nearer endpoint.
      std::complex<double> integral = tanh_sinh(
          [&](double dl, double dr) {
            const double c = dl < dr ? std::cos(dl) : -std::cos(dr);
            const double sn = std::sin(std::min(dl, dr));
            return std::pow(std::complex<double>(p.x, root * c), static_cast<int>(p.n)) *
                   std::pow(sn, 2 * p.lambda - 1);
          },
          M_PI, target);
      double lam = p.lambda;
      double pref = std::exp(std::lgamma(2 * lam + p.n) - std::lgamma(2 * lam) - std::lgamma(p.n + 1.0) +
                             std::lgamma(lam + 0.5) - std::lgamma(lam)) /
                    std::sqrt(M_PI);
      value = pref * integral;
      break;
    }
  }
  return BigComplex(value.real(), value.imag(), bits);
}

}  // namespace chebmellin
