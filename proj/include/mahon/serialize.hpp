#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mahon/cyclotomic.hpp"
#include "mahon/expansion.hpp"
#include "mahon/qseries.hpp"

namespace mahon {

using Json = nlohmann::ordered_json;

// {"t": 3, "coeffs": ["1/2", "-3"]}
Json to_json(const Cyclo& v);
Cyclo cyclo_from_json(const nlohmann::json& j);

// {"order": N, "coeffs": [...]}
Json to_json(const QSeries<Rational>& s);
Json to_json(const QSeries<Cyclo>& s);

// "1,1,3" -> ExponentVector{1,1,3}
ExponentVector parse_exponent_vector(const std::string& csv);

// A basis file is a JSON list of atoms {"j": int, "vector": [ints],
// "s": int, "c": cyclonum-or-rational-string}. Rational coefficients are
// lifted into the common conductor, which must cover every twist index.
std::vector<LinearCombination> basis_from_json(const nlohmann::json& j);

}  // namespace mahon
