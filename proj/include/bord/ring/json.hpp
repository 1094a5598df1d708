#pragma once

#include "bord/ring/presentation.hpp"
#include "bord/steenrod/steenrod.hpp"

#include <json.hpp>

namespace bord::ring {

// Ring schema: {name, generators:[{name,degree}], relations:[[exponent-vector,...]], degree_bound}.
// On input a relation may also be written as a string such as "(x5+x2x3)y4".
nlohmann::json to_json(const RingPresentation& ring);
RingPresentation ring_from_json(const nlohmann::json& j);

// Polynomial as a list of exponent vectors; strings are accepted on input.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const RingPresentation& ring, const nlohmann::json& j);

} // namespace bord::ring

namespace bord::steenrod {

// Steenrod schema: {generator: {i: polynomial}}; polynomials written as strings.
nlohmann::json to_json(const SteenrodSpec& spec);
SteenrodSpec spec_from_json(const ring::RingPresentation& ring, const nlohmann::json& j);

} // namespace bord::steenrod
