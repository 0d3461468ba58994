#include "phipade/json_io.hpp"

#include <json.hpp>

#include "phipade/errors.hpp"

namespace phipade {

using nlohmann::json;

namespace {

std::string value_string(const BigValue& v, unsigned digits) { return v.to_string(digits); }

BigValue read_value(const json& j, const char* what) {
  try {
    if (j.is_string()) return BigValue::parse(j.get<std::string>());
    if (j.is_number_integer()) return BigValue(j.get<long long>());
    if (j.is_number()) return BigValue::parse(j.dump());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
  throw ParseError(std::string(what) + " must be a number or a numeric string");
}

json transform_json(const TransformSpec& t, unsigned digits) {
  return {{"subtract", value_string(t.subtract, digits)},
          {"divide_power", t.divide_power},
          {"scale", value_string(t.scale, digits)},
          {"power", t.power}};
}

TransformSpec read_transform(const json& j) {
  TransformSpec t;
  if (!j.is_object()) throw ParseError("transform must be an object");
  if (j.contains("subtract")) t.subtract = read_value(j["subtract"], "transform.subtract");
  if (j.contains("divide_power")) t.divide_power = j["divide_power"].get<int>();
  if (j.contains("scale")) t.scale = read_value(j["scale"], "transform.scale");
  if (j.contains("power")) t.power = j["power"].get<int>();
  return t;
}

json spec_json(const PhiSpec& s, unsigned digits) {
  return {{"a", value_string(s.a, digits)},
          {"b", value_string(s.b, digits)},
          {"m", s.m},
          {"mu", s.mu}};
}

PhiSpec read_spec(const json& j) {
  if (!j.is_object()) throw ParseError("spec must be an object");
  PhiSpec s;
  s.a = read_value(j.at("a"), "spec.a");
  s.b = read_value(j.at("b"), "spec.b");
  if (j.contains("m")) s.m = j["m"].get<int>();
  if (j.contains("mu")) s.mu = j["mu"].get<int>();
  return s;
}

json complex_json(const BigComplex& z, unsigned digits) {
  return {{"re", format_real(z.re, digits)}, {"im", format_real(z.im, digits)}};
}

BigComplex read_complex(const json& j) {
  if (j.is_object()) {
    return {read_value(j.at("re"), "re").to_real(), read_value(j.at("im"), "im").to_real()};
  }
  return BigComplex(read_value(j, "complex value").to_real());
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

} // namespace

std::string series_to_json(const PowerSeries& series, unsigned digits) {
  json coeffs = json::array();
  for (const auto& c : series.coeffs) coeffs.push_back(value_string(c, digits));
  json doc = {{"coeffs", coeffs}, {"transform", transform_json(series.transform, digits)}};
  if (!series.label.empty()) doc["label"] = series.label;
  return doc.dump(2);
}

PowerSeries series_from_json(const std::string& text, const Context& ctx) {
  ScopedPrecision guard(ctx);
  const json doc = parse_document(text);
  PowerSeries s;
  try {
    const json& coeffs = doc.is_array() ? doc : doc.at("coeffs");
    if (!coeffs.is_array() || coeffs.empty()) throw ParseError("coeffs must be a nonempty array");
    for (const auto& c : coeffs) s.coeffs.push_back(read_value(c, "coefficient"));
    if (doc.is_object()) {
      if (doc.contains("transform")) s.transform = read_transform(doc["transform"]);
      if (doc.contains("label")) s.label = doc["label"].get<std::string>();
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  try {
    s.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return s;
}

std::string phi_spec_to_json(const PhiSpec& spec, unsigned digits) {
  return spec_json(spec, digits).dump();
}

std::string approximant_to_json(const PhiPadeApproximant& ap, unsigned digits) {
  json poles = json::array(), residues = json::array(), poly = json::array();
  for (const auto& z : ap.pf.poles) poles.push_back(complex_json(z, digits));
  for (const auto& r : ap.pf.residues) residues.push_back(complex_json(r, digits));
  for (const auto& c : ap.pf.polynomial) poly.push_back(value_string(c, digits));
  json doc = {{"spec", spec_json(ap.spec, digits)},
              {"transform", transform_json(ap.transform, digits)},
              {"n", ap.n},
              {"poles", poles},
              {"residues", residues},
              {"polynomial", poly}};
  if (ap.pf.exact_poles && ap.pf.exact_residues) {
    json zs = json::array(), rs = json::array();
    for (const auto& z : *ap.pf.exact_poles) zs.push_back(BigValue(z).to_string());
    for (const auto& r : *ap.pf.exact_residues) rs.push_back(BigValue(r).to_string());
    doc["exact_poles"] = zs;
    doc["exact_residues"] = rs;
  }
  json warnings = json::array();
  for (const auto& w : ap.warnings) warnings.push_back(w.message);
  doc["warnings"] = warnings;
  return doc.dump(2);
}

PhiPadeApproximant approximant_from_json(const std::string& text, const Context& ctx) {
  ScopedPrecision guard(ctx);
  const json doc = parse_document(text);
  PhiPadeApproximant ap;
  try {
    ap.spec = read_spec(doc.at("spec"));
    ap.spec.validate();
    if (doc.contains("transform")) ap.transform = read_transform(doc["transform"]);
    ap.n = doc.at("n").get<int>();
    for (const auto& z : doc.at("poles")) ap.pf.poles.push_back(read_complex(z));
    for (const auto& r : doc.at("residues")) ap.pf.residues.push_back(read_complex(r));
    if (doc.contains("polynomial")) {
      for (const auto& c : doc["polynomial"]) ap.pf.polynomial.push_back(read_value(c, "polynomial"));
    }
    if (doc.contains("exact_poles") && doc.contains("exact_residues")) {
      std::vector<Rational> zs, rs;
      for (const auto& z : doc["exact_poles"]) zs.push_back(read_value(z, "exact pole").exact());
      for (const auto& r : doc["exact_residues"]) rs.push_back(read_value(r, "exact residue").exact());
      ap.pf.exact_poles = zs;
      ap.pf.exact_residues = rs;
      ap.pf.poles.clear();
      ap.pf.residues.clear();
      for (const auto& z : zs) ap.pf.poles.emplace_back(BigValue(z).to_real());
      for (const auto& r : rs) ap.pf.residues.emplace_back(BigValue(r).to_real());
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  if (ap.pf.poles.size() != ap.pf.residues.size()) throw ParseError("poles and residues differ in length");
  ap.warnings = check_summability(ap.pf);
  return ap;
}

} // namespace phipade
