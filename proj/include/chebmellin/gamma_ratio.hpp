#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebmellin/rational.hpp"

namespace chebmellin {

// coefficient * prod Gamma(numerator[i]) / prod Gamma(denominator[j]) with
// rational arguments. Arguments that differ by an integer telescope through
// Gamma(z+1) = z Gamma(z); Gamma(1/2) stands for sqrt(pi).
struct GammaRatio {
  Rational coefficient{1};
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;

  GammaRatio& operator*=(const GammaRatio& o);
  GammaRatio& operator/=(const GammaRatio& o);
  friend GammaRatio operator*(GammaRatio a, const GammaRatio& b) { return a *= b; }
  friend GammaRatio operator/(GammaRatio a, const GammaRatio& b) { return a /= b; }
  std::string str() const;
};

// Exact value when every Gamma factor telescopes to a rational number (pairs
// of arguments with an integer difference, leftover positive integers).
// Returns nullopt when an irrational constant survives. Pairs of poles are
// read as the limit of a common shift of both arguments. Throws PoleError
// when an unpaired numerator argument is a non-positive integer.
std::optional<Rational> try_exact(const GammaRatio& g);

}  // namespace chebmellin
