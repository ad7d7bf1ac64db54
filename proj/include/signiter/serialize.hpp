#pragma once

#include <json.hpp>

#include "signiter/minimal.hpp"
#include "signiter/pade.hpp"
#include "signiter/poly.hpp"
#include "signiter/sign_engine.hpp"

namespace signiter {

// Structured output: JSON objects with keys in a fixed order. Rationals are
// "num/den" strings, polynomials ascending arrays of them.
using Json = nlohmann::ordered_json;

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"m", "n", "s", "family", "numerator", "denominator"}.
Json to_json(const IterationSpec& spec);
/// Validates the record against the family invariants; throws ParseError.
IterationSpec spec_from_json(const Json& j);

Json to_json(const ScanRecord& record);
Json to_json(const ConvergenceReport& report);

}  // namespace signiter
