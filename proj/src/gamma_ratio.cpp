#include "chebmellin/gamma_ratio.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chebmellin/errors.hpp"

namespace chebmellin {

GammaRatio& GammaRatio::operator*=(const GammaRatio& o) {
  coefficient *= o.coefficient;
  numerator.insert(numerator.end(), o.numerator.begin(), o.numerator.end());
  denominator.insert(denominator.end(), o.denominator.begin(), o.denominator.end());
  return *this;
}

GammaRatio& GammaRatio::operator/=(const GammaRatio& o) {
  coefficient /= o.coefficient;
  numerator.insert(numerator.end(), o.denominator.begin(), o.denominator.end());
  denominator.insert(denominator.end(), o.numerator.begin(), o.numerator.end());
  return *this;
}

std::string GammaRatio::str() const {
  std::ostringstream os;
  os << coefficient;
  for (const auto& a : numerator) os << " * G(" << a << ")";
  for (const auto& b : denominator) os << " / G(" << b << ")";
  return os.str();
}

namespace {

// Gamma(a) / Gamma(b) with a - b an integer m.
Rational telescoped(const Rational& a, const Rational& b) {
  Rational diff = a - b;
  long m = diff.to_long();
  if (m >= 0) return pochhammer(b, static_cast<unsigned>(m));
  Rational den = pochhammer(a, static_cast<unsigned>(-m));
  if (den.is_zero()) throw PoleError("Gamma pole in telescoped ratio G(" + a.str() + ")/G(" + b.str() + ")");
  return Rational(1) / den;
}

}  // namespace

std::optional<Rational> try_exact(const GammaRatio& g) {
  if (g.coefficient.is_zero()) return Rational(0);
  // Group arguments by fractional part.
  std::map<Rational, std::pair<std::vector<Rational>, std::vector<Rational>>> classes;
  for (const auto& a : g.numerator) classes[a.frac()].first.push_back(a);
  for (const auto& b : g.denominator) classes[b.frac()].second.push_back(b);

  Rational value = g.coefficient;
  bool zero = false;
  for (auto& [frac, lists] : classes) {
    auto& [num, den] = lists;
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    const size_t paired = std::min(num.size(), den.size());
    // Pair from the largest arguments down so that leftover arguments are the
    // smallest ones.
    for (size_t k = 0; k < paired; ++k) {
      value *= telescoped(num[num.size() - 1 - k], den[den.size() - 1 - k]);
    }
    std::vector<Rational> left_num(num.begin(), num.end() - static_cast<long>(paired));
    std::vector<Rational> left_den(den.begin(), den.end() - static_cast<long>(paired));
    if (left_num.empty() && left_den.empty()) continue;
    if (!frac.is_zero()) {
      // Only Gamma(1/2)^2 = pi pairs could reduce further, and pi is irrational.
      return std::nullopt;
    }
    for (const auto& a : left_num) {
      if (a.sign() <= 0) throw PoleError("Gamma pole at " + a.str());
      value *= factorial(static_cast<unsigned>(a.to_long() - 1));
    }
    for (const auto& b : left_den) {
      if (b.sign() <= 0) zero = true;
      else value /= factorial(static_cast<unsigned>(b.to_long() - 1));
    }
  }
  if (zero) return Rational(0);
  return value;
}

}  // namespace chebmellin
