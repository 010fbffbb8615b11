#include "chebmellin/ratpoly.hpp"

#include <sstream>

#include "chebmellin/errors.hpp"

namespace chebmellin {

const char* variable_name(Variable v) {
  switch (v) {
    case Variable::s: return "s";
    case Variable::x: return "x";
    case Variable::t: return "t";
    case Variable::u: return "u";
  }
  return "?";
}

RatPoly::RatPoly(std::vector<Rational> coeffs, Variable var) : coeffs_(std::move(coeffs)), var_(var) {
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  trim();
}

RatPoly RatPoly::monomial(unsigned k, const Rational& c, Variable var) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return RatPoly(std::move(v), var);
}

void RatPoly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() == 1) return RatPoly({Rational(0)}, var_);
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return RatPoly(std::move(d), var_);
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly acc({Rational(0)}, inner.var_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += RatPoly({*it}, inner.var_);
  }
  return acc;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw PoleError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const unsigned dd = divisor.degree();
  if (degree() < dd) return {RatPoly({Rational(0)}, var_), *this};
  std::vector<Rational> quot(degree() - dd + 1, Rational(0));
  const Rational lead_inv = Rational(1) / divisor.leading();
  for (size_t k = quot.size(); k-- > 0;) {
    Rational c = rem[k + dd] * lead_inv;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (unsigned j = 0; j <= dd; ++j) rem[k + j] -= c * divisor.coeffs_[j];
  }
  rem.resize(dd == 0 ? 1 : dd);
  return {RatPoly(std::move(quot), var_), RatPoly(std::move(rem), var_)};
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

std::string RatPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero() && !(k == 0 && first)) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    Rational mag = first ? c : c.abs();
    if (k == 0 || mag != Rational(1)) {
      if (k > 0 && mag == Rational(-1)) os << "-";
      else os << (k > 0 ? "(" + mag.str() + ")" : mag.str());
    }
    if (k >= 1) os << variable_name(var_);
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

RatPoly poly_shift(const RatPoly& p, const Rational& a) {
  // Horner in (var + a), done in place on the coefficient vector.
  const auto& c = p.coeffs();
  std::vector<Rational> r(c.begin(), c.end());
  const size_t n = r.size();
  if (a.is_zero()) return p;
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = n - 1; j-- > i;) r[j] += a * r[j + 1];
  }
  return RatPoly(std::move(r), p.variable());
}

RatPoly poly_negate_argument(const RatPoly& p) {
  std::vector<Rational> r = p.coeffs();
  for (size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return RatPoly(std::move(r), p.variable());
}

RatPoly poly_reflect(const RatPoly& p) {
  // p(1 - s) = p(-(s - 1)): negate the argument, then shift by -1.
  return poly_shift(poly_negate_argument(p), Rational(-1));
}

}  // namespace chebmellin
