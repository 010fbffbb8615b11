#include "chebmellin/poly_json.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>

#include "chebmellin/errors.hpp"

namespace chebmellin {

using ordered_json = nlohmann::ordered_json;

PolyDocument poly_document(const MellinClosedForm& f) {
  PolyDocument d;
  d.family = f.family;
  d.n = f.n;
  if (f.family == Family::Gegenbauer) d.lambda = f.lambda;
  if (f.family == Family::Beta) d.beta = f.beta;
  if (f.family == Family::T) {
    d.normalization = "monic";
    d.multiplier = f.multiplier;
  }
  d.poly = f.poly;
  return d;
}

std::string to_json(const PolyDocument& doc) {
  ordered_json j;
  j["schema"] = "1";
  j["family"] = family_name(doc.family);
  j["n"] = doc.n;
  if (doc.lambda) j["lambda"] = doc.lambda->str();
  if (doc.beta) j["beta"] = doc.beta->str();
  j["normalization"] = doc.normalization;
  if (doc.multiplier) j["multiplier"] = doc.multiplier->str();
  j["variable"] = variable_name(doc.poly.variable());
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : doc.poly.coeffs()) coeffs.push_back(c.str());
  j["coeffs_ascending"] = std::move(coeffs);
  return j.dump();
}

Family parse_family(const std::string& name) {
  std::string k = name;
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return std::tolower(c); });
  if (k == "u") return Family::U;
  if (k == "t") return Family::T;
  if (k == "gegenbauer") return Family::Gegenbauer;
  if (k == "beta") return Family::Beta;
  throw PreconditionError("unknown family '" + name + "'");
}

namespace {

Variable parse_variable(const std::string& v) {
  for (Variable c : {Variable::s, Variable::x, Variable::t, Variable::u})
    if (v == variable_name(c)) return c;
  throw PreconditionError("unknown variable '" + v + "'");
}

Rational rational_field(const ordered_json& j, const char* key) {
  if (!j.at(key).is_string()) throw PreconditionError(std::string(key) + " must be a string");
  return Rational::parse(j.at(key).get<std::string>());
}

}  // namespace

PolyDocument parse_poly_json(const std::string& text) {
  PolyDocument d;
  try {
    ordered_json j = ordered_json::parse(text);
    if (j.value("schema", "") != "1") throw PreconditionError("unsupported schema");
    d.family = parse_family(j.at("family").get<std::string>());
    d.n = j.at("n").get<unsigned>();
    if (j.contains("lambda")) d.lambda = rational_field(j, "lambda");
    if (j.contains("beta")) d.beta = rational_field(j, "beta");
    d.normalization = j.at("normalization").get<std::string>();
    if (j.contains("multiplier")) d.multiplier = rational_field(j, "multiplier");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs_ascending")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    if (coeffs.empty()) throw PreconditionError("empty coefficient list");
    d.poly = RatPoly(std::move(coeffs), parse_variable(j.at("variable").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(std::string("malformed polynomial JSON: ") + e.what());
  }
  return d;
}

}  // namespace chebmellin
