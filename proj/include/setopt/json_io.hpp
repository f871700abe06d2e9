#pragma once

#include "json.hpp"
#include "setopt/kernel.hpp"

namespace setopt::io {

using Json = nlohmann::json;

// Rationals travel as strings "p" or "p/q"; integers and decimals are accepted on input.
Json to_json(const Q& q);
Json to_json(const Vec& v);
Json to_json(const ExtReal& e);
Json to_json(const UpperSet& s);
Json to_json(const std::vector<Vec>& vs);

Q rat_from_json(const Json& j);
Vec vec_from_json(const Json& j, int dim = -1);
std::vector<Vec> vecs_from_json(const Json& j, int dim = -1);
std::vector<Halfspace> halfspaces_from_json(const Json& j, int dim = -1);
// Accepts the serialized form, {"points", "rays"}, or an expression string.
UpperSet set_from_json(const Workspace& ws, const Json& j);

// {"tag": ...} set plus phi_{z*} for every workspace direction.
Json describe(const Workspace& ws, const UpperSet& s);

}  // namespace setopt::io
