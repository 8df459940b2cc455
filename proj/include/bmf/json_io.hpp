#pragma once

#include <json.hpp>
#include <string>

#include "bmf/factorization.hpp"
#include "bmf/hurwitz.hpp"
#include "bmf/polynomial.hpp"

namespace bmf {

using json = nlohmann::json;

// Version of the file formats below; bumped on incompatible changes.
inline constexpr const char* kSchemaVersion = "1.0";

// {"p", "cuspidal", "factors": [{"q": [...], "rho"}]} when every factor is a
// half-twist power, otherwise {"p", "words": [[...]]}.
json to_json(const Factorization& f);
Factorization factorization_from_json(const json& j);

// {"moves": [{"k", "dir": "R"|"Rinv"}], "conj": [...]}; a bare list of moves
// is also accepted on input.
json to_json(const MoveSequence& m);
MoveSequence moves_from_json(const json& j, int strands);

// {"terms": [{"i", "j", "re", "im"}]}
json to_json(const BivariatePoly& f);
BivariatePoly polynomial_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace bmf
