#include "chebmellin/bigfloat.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "chebmellin/errors.hpp"

namespace chebmellin {

namespace {
thread_local prec_t g_default_precision = 256;

prec_t min_prec(const BigFloat& a, const BigFloat& b) { return std::min(a.precision(), b.precision()); }
}  // namespace

prec_t default_precision() { return g_default_precision; }

PrecisionScope::PrecisionScope(prec_t bits) : saved_(g_default_precision) { g_default_precision = bits; }
PrecisionScope::~PrecisionScope() { g_default_precision = saved_; }

BigFloat::BigFloat(long v, prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v, prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& v, prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.gmp().get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(const std::string& text, prec_t prec) {
  BigFloat r(0L, prec);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0 && !r.is_finite())
    throw PreconditionError("malformed number: '" + text + "'");
  return r;
}

BigFloat BigFloat::pi(prec_t prec) {
  BigFloat r(0L, prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::infinity(prec_t prec) {
  BigFloat r(0L, prec);
  mpfr_set_inf(r.v_, 1);
  return r;
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(prec_t prec) const {
  BigFloat r(0L, prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

Rational BigFloat::to_rational() const {
  if (!is_finite()) throw PreconditionError("to_rational of a non-finite value");
  if (is_zero()) return Rational(0);
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpz_class p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e >= 0 ? Rational(mpz_class(m * p)) : Rational(m, p);
}

std::string BigFloat::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  if (o.precision() < precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  if (o.precision() < precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  if (o.precision() < precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.precision() < precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(0L, precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0L, min_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0L, min_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0L, min_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0L, min_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const Rational& b) {
  BigFloat r(0L, a.precision());
  mpfr_mul_q(r.v_, a.v_, b.gmp().get_mpq_t(), MPFR_RNDN);
  return r;
}
BigFloat operator+(const BigFloat& a, const Rational& b) {
  BigFloat r(0L, a.precision());
  mpfr_add_q(r.v_, a.v_, b.gmp().get_mpq_t(), MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r(0L, a.precision());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, long b) {
  BigFloat r(0L, a.precision());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  return os << x.str(static_cast<int>(static_cast<double>(x.precision()) / 3.32));
}

#define CHEBMELLIN_UNARY(name, fn)            \
  BigFloat name(const BigFloat& x) {          \
    BigFloat r(0L, x.precision());            \
    fn(r.get(), x.get(), MPFR_RNDN);          \
    return r;                                 \
  }
CHEBMELLIN_UNARY(abs, mpfr_abs)
CHEBMELLIN_UNARY(sqrt, mpfr_sqrt)
CHEBMELLIN_UNARY(exp, mpfr_exp)
CHEBMELLIN_UNARY(log, mpfr_log)
CHEBMELLIN_UNARY(log2, mpfr_log2)
CHEBMELLIN_UNARY(sin, mpfr_sin)
CHEBMELLIN_UNARY(cos, mpfr_cos)
#undef CHEBMELLIN_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(0L, min_prec(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(0L, min_prec(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(0L, min_prec(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(0L, x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

std::string BigComplex::str(int digits) const {
  std::string r = re_.str(digits);
  std::string i = im_.str(digits);
  if (i.empty() || (i[0] != '-' && i[0] != '+')) i = "+" + i;
  return r + i + "i";
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  BigFloat r = re_ * o.re_ - im_ * o.im_;
  BigFloat i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}
BigComplex& BigComplex::operator/=(const BigComplex& o) {
  if (o.is_zero()) throw PoleError("complex division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  BigFloat d = o.re_ * o.re_ + o.im_ * o.im_;
  BigFloat r = (re_ * o.re_ + im_ * o.im_) / d;
  BigFloat i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  return os << z.str(static_cast<int>(static_cast<double>(z.precision()) / 3.32));
}

BigFloat abs(const BigComplex& z) { return hypot(z.re(), z.im()); }
BigFloat arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re());
  if (z.im().is_zero()) return {m, BigFloat(0L, m.precision())};
  return {m * cos(z.im()), m * sin(z.im())};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw PoleError("log of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return z;
  if (z.im().is_zero() && z.re().sign() > 0) return {sqrt(z.re()), BigFloat(0L, z.precision())};
  BigFloat r = abs(z);
  BigFloat a = sqrt((r + z.re()) / 2L);
  BigFloat b = sqrt((r - z.re()) / 2L);
  if (z.im().sign() < 0) b = -b;
  return {a, b};
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
  if (z.is_zero()) {
    if (w.re().sign() > 0) return BigComplex(BigFloat(0L, z.precision()));
    throw PoleError("zero to a non-positive power");
  }
  return exp(w * log(z));
}

BigComplex pow(const BigComplex& z, unsigned k) {
  BigComplex result(BigFloat(1L, z.precision()));
  BigComplex base = z;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

BigComplex sin(const BigComplex& z) {
  BigFloat a = z.re(), b = z.im();
  BigFloat eb = exp(b), emb = exp(-b);
  BigFloat ch = (eb + emb) / 2L, sh = (eb - emb) / 2L;
  return {sin(a) * ch, cos(a) * sh};
}

BigFloat relative_difference(const BigComplex& a, const BigComplex& b) {
  BigFloat d = abs(a - b);
  BigFloat m = abs(b);
  return m.is_zero() ? d : d / m;
}

BigComplex evaluate(const RatPoly& p, const BigComplex& z) {
  const auto& c = p.coeffs();
  prec_t prec = z.precision();
  BigComplex acc(BigFloat(0L, prec));
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= z;
    acc = acc + *it;
  }
  return acc;
}

BigComplex to_complex(const Rational& r, prec_t prec) { return BigComplex(r, prec); }

std::pair<Rational, Rational> parse_complex_literal(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw PreconditionError("empty complex literal");
  if (s.back() != 'i') return {Rational::parse(s), Rational(0)};
  s.pop_back();
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  if (im_part[0] == '+') im_part = im_part.substr(1);
  return {Rational::parse(re_part), Rational::parse(im_part)};
}

}  // namespace chebmellin
