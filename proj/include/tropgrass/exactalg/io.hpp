#pragma once

// JSON for ideals and weight vectors.

#include <string>
#include <string_view>
#include <vector>

#include "tropgrass/exactalg/ideal.hpp"

namespace tropgrass::alg {

/// {"characteristic": 0, "variables": ["p_12", ...], "generators": ["p_12*p_34 - ...", ...]}
/// "field" ("QQ", "GF(2)") is written for reference and accepted on input.
std::string ideal_to_json(const Ideal& ideal);
Ideal parse_ideal_json(std::string_view text);

/// Either an array of rationals in variable order, or an object keyed by
/// variable name or sorted index tuple ("123" for p_123). Missing keys are 0.
std::vector<Rational> parse_weight_json(std::string_view text, const PolyRing& ring);
std::string weight_to_json(const std::vector<Rational>& w, const PolyRing& ring);

}  // namespace tropgrass::alg
