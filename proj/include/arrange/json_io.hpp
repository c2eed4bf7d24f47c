#pragma once

#include <string>

#include "arrange/arrangement.hpp"
#include "arrange/digraph.hpp"
#include "arrange/polynomial.hpp"
#include "arrange/verdict.hpp"

#include "json.hpp"

namespace arrange {

// {"n": 4, "arcs": [[1,2],[1,3]], "weights": {"1": [-1,0], "2": null}}
nlohmann::json to_json(const VertexWeightedDigraph& g);
VertexWeightedDigraph digraph_from_json(const nlohmann::json& j);

// {"dim": 3, "hyperplanes": [{"coeffs": [1,-1,0], "constant": 0}, ...],
//  "cone_infinity_index": 2}
nlohmann::json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const nlohmann::json& j);

// ascending coefficient array
nlohmann::json to_json(const IntegerPolynomial& p);

// {"status": "Free", "exponents": [...], "evidence": [...]}
nlohmann::json to_json(const FreenessVerdict& v);

std::string canonical_dump(const nlohmann::json& j);

} // namespace arrange
