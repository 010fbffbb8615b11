#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace chebmellin {

// Exact fraction in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& v) : q_(v) {}
  explicit Rational(const mpq_class& v) : q_(v) { q_.canonicalize(); }

  // Accepts "a", "a/b", and exact decimals such as "-0.25" or "1e-3".
  static Rational parse(std::string_view text);

  // "num/den", or just "num" when the denominator is 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& gmp() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_nonpositive_integer() const { return is_integer() && sgn(q_) <= 0; }
  int sign() const { return sgn(q_); }
  // Valid only when is_integer() and the value fits in a long.
  long to_long() const;

  Rational floor() const;
  Rational frac() const { return *this - floor(); }
  Rational abs() const { return Rational(::abs(q_)); }
  Rational pow(long e) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// a (a+1) ... (a+k-1); 1 when k = 0.
Rational pochhammer(const Rational& a, unsigned k);
Rational factorial(unsigned n);
Rational binomial(long n, long k);

}  // namespace chebmellin
