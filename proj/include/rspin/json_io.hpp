#pragma once

#include "rspin/flatness.hpp"
#include "rspin/invariants.hpp"
#include "rspin/poly.hpp"

#include <json.hpp>

namespace rspin {

/// Polynomial with its registry; terms listed in canonical rendering order,
/// coefficients as exact "p/q" strings.
nlohmann::ordered_json poly_to_json(const Poly& p);
/// Rebuilds the polynomial, reconstructing the registry from variable names
/// ("x" / "t<i>" / "y<i>" / "b<i>").
Poly poly_from_json(const nlohmann::json& j);

nlohmann::ordered_json invariants_to_json(int r);
nlohmann::ordered_json report_to_json(const PrimitivityReport& report);

}  // namespace rspin
