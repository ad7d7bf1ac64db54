#include "signiter/serialize.hpp"

#include <stdexcept>

#include "signiter/errors.hpp"

namespace signiter {

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of rational strings");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError("polynomial coefficient must be a string");
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  return Poly(std::move(coeffs));
}

Json to_json(const IterationSpec& spec) {
  Json out;
  out["m"] = spec.m();
  out["n"] = spec.n();
  out["s"] = spec.s();
  out["family"] = std::string(to_string(spec.family()));
  out["numerator"] = to_json(spec.numerator());
  out["denominator"] = to_json(spec.denominator());
  return out;
}

IterationSpec spec_from_json(const Json& j) {
  try {
    const Poly num = poly_from_json(j.at("numerator"));
    const Poly den = poly_from_json(j.at("denominator"));
    IterationSpec spec = IterationSpec::from_polynomials(num, den);
    if (j.at("m").get<int>() != spec.m() || j.at("n").get<int>() != spec.n() || j.at("s").get<int>() != spec.s()) {
      throw ParseError("degree fields disagree with the polynomials");
    }
    if (family_from_string(j.at("family").get<std::string>()) != spec.family()) {
      throw ParseError("family field disagrees with the degree parities");
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed iteration record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid iteration record: ") + e.what());
  }
}

Json to_json(const ScanRecord& record) {
  Json out;
  out["m"] = record.m;
  out["n"] = record.n;
  out["s"] = record.s;
  out["nullity"] = record.nullity;
  out["strict"] = record.strict ? Json(*record.strict) : Json(nullptr);
  out["certified"] = record.certified;
  return out;
}

Json to_json(const ConvergenceReport& report) {
  Json out;
  out["iterate_count"] = report.iterate_count;
  out["step_norms"] = report.step_norms;
  out["final_residual_sq"] = report.final_residual_sq;
  out["estimated_order"] = report.estimated_order ? Json(*report.estimated_order) : Json(nullptr);
  out["status"] = std::string(to_string(report.status));
  return out;
}

}  // namespace signiter
