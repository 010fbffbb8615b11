#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <climits>
#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "chebmellin/rational.hpp"
#include "chebmellin/ratpoly.hpp"

namespace chebmellin {

using prec_t = mpfr_prec_t;

// Thread-local precision used by default-constructed values.
prec_t default_precision();

class PrecisionScope {
 public:
  explicit PrecisionScope(prec_t bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  prec_t saved_;
};

// MPFR real with an explicit precision. Binary operations round to the smaller
// operand precision.
class BigFloat {
 public:
  BigFloat() : BigFloat(0L, default_precision()) {}
  BigFloat(int v) : BigFloat(static_cast<long>(v), default_precision()) {}  // NOLINT
  BigFloat(long v, prec_t prec);
  BigFloat(double v, prec_t prec);
  BigFloat(const Rational& v, prec_t prec);
  static BigFloat parse(const std::string& text, prec_t prec);
  static BigFloat pi(prec_t prec);
  static BigFloat infinity(prec_t prec);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  prec_t precision() const { return mpfr_get_prec(v_); }
  BigFloat with_precision(prec_t prec) const;
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Exact rational value of the binary float (finite values only).
  Rational to_rational() const;
  // Scientific notation with `digits` significant digits.
  std::string str(int digits) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  long exponent() const { return is_zero() ? LONG_MIN / 2 : mpfr_get_exp(v_); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat operator-() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const Rational& b);
  friend BigFloat operator+(const BigFloat& a, const Rational& b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator/(const BigFloat& a, long b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log2(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat ldexp(const BigFloat& x, long e);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);

class BigComplex {
 public:
  BigComplex() : re_(), im_() {}
  BigComplex(int v) : re_(v), im_(0) {}  // NOLINT
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(BigFloat re) : re_(re), im_(0L, re.precision()) {}
  BigComplex(const Rational& re, const Rational& im, prec_t prec) : re_(re, prec), im_(im, prec) {}
  BigComplex(const Rational& re, prec_t prec) : re_(re, prec), im_(0L, prec) {}
  BigComplex(double re, double im, prec_t prec) : re_(re, prec), im_(im, prec) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  prec_t precision() const { return std::min(re_.precision(), im_.precision()); }
  BigComplex with_precision(prec_t prec) const { return {re_.with_precision(prec), im_.with_precision(prec)}; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  // True when the value is exactly a non-positive integer.
  bool is_nonpositive_integer() const { return im_.is_zero() && re_.is_integer() && re_.sign() <= 0; }
  std::string str(int digits) const;

  BigComplex conj() const { return {re_, -im_}; }
  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& b) { return {a.re_ * b, a.im_ * b}; }
  friend BigComplex operator*(const BigComplex& a, const Rational& b) { return {a.re_ * b, a.im_ * b}; }
  friend BigComplex operator+(const BigComplex& a, const Rational& b) { return {a.re_ + b, a.im_}; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  BigFloat re_, im_;
};

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

BigFloat abs(const BigComplex& z);
BigFloat arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, const BigComplex& w);
BigComplex pow(const BigComplex& z, unsigned k);
BigComplex sin(const BigComplex& z);
// |a - b| / |b| (or |a - b| when b = 0).
BigFloat relative_difference(const BigComplex& a, const BigComplex& b);

// Horner evaluation of an exact polynomial at a complex point.
BigComplex evaluate(const RatPoly& p, const BigComplex& z);
BigComplex to_complex(const Rational& r, prec_t prec);

// Parses "a", "bi", "a+bi", "a-bi" with decimal or rational parts.
std::pair<Rational, Rational> parse_complex_literal(const std::string& text);

}  // namespace chebmellin
