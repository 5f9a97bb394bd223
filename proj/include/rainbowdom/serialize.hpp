#pragma once

#include "rainbowdom/bounds.hpp"
#include "rainbowdom/constructions.hpp"
#include "rainbowdom/extremal.hpp"
#include "rainbowdom/labelings.hpp"
#include "rainbowdom/solvers.hpp"

#include <json.hpp>

#include <string_view>

namespace rainbowdom {

using Json = nlohmann::ordered_json;

// {"k":2,"colors":[[1],[],[2]]}
Json to_json(const RainbowAssignment& f);
RainbowAssignment rainbow_from_json(const Json& j);

// {"values":[0,2,0,1]}
Json to_json(const RomanAssignment& f);
RomanAssignment roman_from_json(const Json& j);

// {"set":[0,2]}
Json to_json(const VertexSet& s);

// {"invariant":"gamma_r2","value":3,"method":"tree_dp","witness":{...},"nodes":4}
Json to_json(const SolveResult& r, std::string_view invariant);

Json to_json(const ConstructedRdf& c);

// {"parts":[[0,1,2,3]],"centers":[1]}
Json to_json(const P4Certificate& c);
P4Certificate certificate_from_json(const Json& j);

Json to_json(const BoundReport& r);
Json to_json(const ProductReport& r);

}  // namespace rainbowdom
