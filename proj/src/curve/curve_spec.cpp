// SPDX-License-Identifier: Apache-2.0
#include <json.hpp>

#include "curve/curve.hpp"

namespace twomat::curve {

namespace {

using nlohmann::json;

cx parse_complex(const json& v, const std::string& field) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  fail(ErrorCode::ParseError, "field '" + field + "' must hold numbers or [re, im] pairs");
}

Polynomial parse_poly(const json& doc, const std::string& field, bool required) {
  if (!doc.contains(field)) {
    if (required) fail(ErrorCode::ParseError, "missing field '" + field + "'");
    return Polynomial::constant(1.0);
  }
  const json& arr = doc.at(field);
  if (!arr.is_array() || arr.empty()) fail(ErrorCode::ParseError, "field '" + field + "' must be a non-empty array");
  std::vector<cx> c;
  for (const auto& v : arr) c.push_back(parse_complex(v, field));
  return Polynomial(std::move(c));
}

json dump_poly(const Polynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back({c.real(), c.imag()});
  if (arr.empty()) arr.push_back({0.0, 0.0});
  return arr;
}

}  // namespace

CurveSpec parse_curve_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::ParseError, "curve spec must be a JSON object");
  CurveSpec spec;
  const Polynomial xn = parse_poly(doc, "x_num", true);
  const Polynomial xd = parse_poly(doc, "x_den", false);
  const Polynomial yn = parse_poly(doc, "y_num", true);
  const Polynomial yd = parse_poly(doc, "y_den", false);
  if (xd.is_zero() || yd.is_zero()) fail(ErrorCode::ParseError, "denominator is the zero polynomial");
  if (xn.is_zero()) fail(ErrorCode::ParseError, "x numerator is the zero polynomial");
  spec.x = RationalFunction(xn, xd);
  spec.y = RationalFunction(yn, yd);
  if (doc.contains("g2_tilde_lead")) {
    spec.g_lead = parse_complex(doc.at("g2_tilde_lead"), "g2_tilde_lead");
    if (*spec.g_lead == cx{}) fail(ErrorCode::ParseError, "g2_tilde_lead must be nonzero");
  }
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) fail(ErrorCode::ParseError, "label must be a string");
    spec.label = doc.at("label").get<std::string>();
  }
  return spec;
}

std::string curve_spec_to_json(const CurveSpec& spec) {
  json doc;
  doc["x_num"] = dump_poly(spec.x.num());
  doc["x_den"] = dump_poly(spec.x.den());
  doc["y_num"] = dump_poly(spec.y.num());
  doc["y_den"] = dump_poly(spec.y.den());
  if (spec.g_lead) doc["g2_tilde_lead"] = {spec.g_lead->real(), spec.g_lead->imag()};
  if (!spec.label.empty()) doc["label"] = spec.label;
  return doc.dump();
}

}  // namespace twomat::curve
