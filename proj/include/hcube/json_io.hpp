#pragma once

// JSON encodings used by the command-line tool.
//
//   vertex       {"period": p, "pattern": "+-", "overrides": {"5": "-"}}
//   permutation  {"moves": {"1": -2, "2": -1}}                (direct form)
//                {"perm": {"1": 3, "3": 1}, "signs": {"2": -1}} (wreath form)
//   oracle       {"type": "regular", "perm": <permutation>}
//                {"type": "piecewise", "cases": [{"component_rep": <vertex>, "perm": <permutation>}]}
//                {"type": "patched", "base": <oracle>, "images": [{"from": <vertex>, "to": <vertex>}]}
//   cube map     {"n": 3, "map": {"000": "101", ...}}  (bit k at string position k-1)
//
// Object keys that name coordinates are decimal strings of positive integers.
// Everything is canonicalized on load; output keys are in ascending numeric
// order. Loaders throw InputError on any malformed document.

#include <string>

#include "json.hpp"
#include "hcube/automorphism.hpp"
#include "hcube/finite_cube.hpp"
#include "hcube/symplectic.hpp"
#include "hcube/vertex.hpp"

namespace hcube::json_io {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text);

Json to_json(const Vertex& v);
Vertex vertex_from_json(const Json& j);

/// Direct ("moves") form.
Json to_json(const SymplecticPerm& s);
Json to_json(const WreathPair& w);
/// Accepts either the direct or the wreath form.
SymplecticPerm perm_from_json(const Json& j);

AutomorphismOracle oracle_from_json(const Json& j);

Json to_json(const ReconstructionResult& r);
Json to_json(const RegularityVerdict& v, std::span<const Vertex> reps);

Json to_json(const CubeAutomorphism& a);
CubeAutomorphism cube_automorphism_from_json(const Json& j);

/// Positive decimal coordinate key, e.g. "17".
Index parse_index_key(const std::string& key);

}  // namespace hcube::json_io
