#pragma once

#include <optional>
#include <string>

#include "chebmellin/mellin_closed_form.hpp"
#include "chebmellin/quadrature.hpp"
#include "chebmellin/rational.hpp"
#include "chebmellin/ratpoly.hpp"

namespace chebmellin {

// Serialized polynomial factor (schema "1").
struct PolyDocument {
  Family family = Family::U;
  unsigned n = 0;
  std::optional<Rational> lambda;      // gegenbauer only
  std::optional<Rational> beta;        // beta only
  std::string normalization = "rational-p";  // "monic" for T, with multiplier
  std::optional<Rational> multiplier;
  RatPoly poly;
};

PolyDocument poly_document(const MellinClosedForm& f);

// One-line JSON, keys in schema order.
std::string to_json(const PolyDocument& doc);

// Throws PreconditionError on malformed input or an unknown schema.
PolyDocument parse_poly_json(const std::string& text);

Family parse_family(const std::string& name);  // "u", "t", "gegenbauer", "beta"; case-insensitive

}  // namespace chebmellin
