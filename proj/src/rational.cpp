#include "chebmellin/rational.hpp"

#include <cctype>

#include "chebmellin/errors.hpp"

namespace chebmellin {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw PoleError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PoleError("division by zero rational");
  q_ /= o.q_;
  return *this;
}

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
  for (size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  long exponent = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    exponent = parse_integer(s.substr(epos + 1), whole).get_si();
    s = s.substr(0, epos);
  }
  bool negative = !s.empty() && s[0] == '-';
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s = s.substr(1);
  auto dot = s.find('.');
  std::string digits;
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    exponent -= static_cast<long>(s.size() - dot - 1);
  }
  if (digits.empty()) throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
  mpz_class mant = parse_integer(digits, whole);
  if (negative) mant = -mant;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent >= 0 ? Rational(mpz_class(mant * scale)) : Rational(mant, scale);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(s.substr(0, slash), text), den);
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
  return Rational(parse_integer(s, text));
}

std::string Rational::str() const { return q_.get_str(10); }

long Rational::to_long() const { return q_.get_num().get_si(); }

Rational Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return Rational(f);
}

Rational Rational::pow(long e) const {
  Rational base = e < 0 ? Rational(1) / *this : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.q_.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.q_.get_den_mpz_t(), k);
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pochhammer(const Rational& a, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) {
    r *= a + Rational(static_cast<long>(i));
    if (r.is_zero()) break;
  }
  return r;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  // Generalized binomial via falling factorial so negative n works.
  Rational r(1);
  for (long i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

}  // namespace chebmellin
